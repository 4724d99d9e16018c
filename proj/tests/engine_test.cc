#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "hanabi/game_state.h"
#include "hanabi/observation.h"
#include "hanabi/trace.h"
#include "test_util.h"

namespace hanabi {
namespace {

using testing::C;
using testing::Cards;
using testing::CompleteSetup;

GameState TwoPlayerSetup(std::vector<Card> hand0, std::vector<Card> hand1,
                         int info = kMaxInfoTokens, int lives = kMaxLifeTokens,
                         Stacks stacks = {}, int deck_size = -1) {
  GameState::Setup setup;
  setup.hands = {std::move(hand0), std::move(hand1)};
  setup.stacks = stacks;
  setup.info_tokens = info;
  setup.life_tokens = lives;
  return GameState::FromSetup(CompleteSetup(setup, {}, deck_size));
}

TEST(CardTest, DeckComposition) {
  const CardCounts counts = FullDeckCounts();
  EXPECT_EQ(std::accumulate(counts.begin(), counts.end(), 0), kDeckSize);
  EXPECT_EQ(FullDeckCounts()[C("R1").Index()], 3);
  EXPECT_EQ(FullDeckCounts()[C("B4").Index()], 2);
  EXPECT_EQ(FullDeckCounts()[C("W5").Index()], 1);
  for (int i = 0; i < kNumIdentities; ++i) {
    EXPECT_EQ(Card::FromIndex(i).Index(), i);
    EXPECT_EQ(ParseCard(ToString(Card::FromIndex(i))), Card::FromIndex(i));
  }
  EXPECT_FALSE(ParseCard("X1").has_value());
  EXPECT_FALSE(ParseCard("R6").has_value());
}

TEST(CardTest, UselessIncludesDeadPrerequisites) {
  Stacks stacks{};
  stacks[static_cast<int>(Suit::kGreen)] = 1;
  CardCounts discard{};
  EXPECT_TRUE(IsUseless(C("G1"), stacks, discard));
  EXPECT_FALSE(IsUseless(C("G4"), stacks, discard));
  discard[C("G3").Index()] = 2;
  EXPECT_TRUE(IsUseless(C("G4"), stacks, discard));
  EXPECT_TRUE(IsUseless(C("G5"), stacks, discard));
  EXPECT_FALSE(IsUseless(C("G2"), stacks, discard));
}

TEST(ActionTest, SerializeRoundTrip) {
  const std::vector<Action> actions = {Action::Play(2), Action::Discard(0),
                                       Action::TellSuit(1, Suit::kRed),
                                       Action::TellRank(3, 4)};
  for (const Action& a : actions) {
    EXPECT_EQ(ParseAction(Serialize(a)), a) << Serialize(a);
  }
  EXPECT_EQ(Serialize(Action::TellSuit(1, Suit::kRed)), "tell 1 suit R");
  EXPECT_FALSE(ParseAction("tell 1 colour R").has_value());
  EXPECT_FALSE(ParseAction("play").has_value());
}

TEST(EngineTest, OpeningStateHasNoDiscards) {
  for (int n = 2; n <= 5; ++n) {
    const GameState state = GameState::NewGame(n, 42);
    EXPECT_EQ(state.info_tokens(), 8);
    EXPECT_EQ(state.life_tokens(), 3);
    EXPECT_EQ(state.deck_size(), kDeckSize - 5 * n);
    for (const Action& a : state.LegalActions()) {
      EXPECT_NE(a.type, ActionType::kDiscard);
    }
  }
}

TEST(EngineTest, LegalActionsMatchDefinition) {
  const GameState state = TwoPlayerSetup(Cards({"W1", "W2", "Y1", "G3", "B5"}),
                                         Cards({"R1", "R1", "R2", "W3", "W3"}),
                                         /*info=*/5);
  const ActionList legal = state.LegalActions();
  std::set<std::string> got;
  for (const Action& a : legal) got.insert(Serialize(a));
  std::set<std::string> want;
  for (int i = 0; i < 5; ++i) {
    want.insert(Serialize(Action::Play(i)));
    want.insert(Serialize(Action::Discard(i)));
  }
  for (const char* t : {"tell 1 suit R", "tell 1 suit W", "tell 1 rank 1",
                        "tell 1 rank 2", "tell 1 rank 3"}) {
    want.insert(t);
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(legal.size(), want.size());  // no duplicates
  EXPECT_FALSE(state.IsLegal(Action::TellSuit(1, Suit::kBlue)));
  EXPECT_FALSE(state.IsLegal(Action::TellRank(0, 1)));  // self
  EXPECT_FALSE(state.IsLegal(Action::Play(5)));
}

TEST(EngineTest, NoTellsWithoutInfoTokens) {
  const GameState state = TwoPlayerSetup(Cards({"W1", "W2", "Y1", "G3", "B5"}),
                                         Cards({"R1", "R1", "R2", "W3", "W3"}),
                                         /*info=*/0);
  for (const Action& a : state.LegalActions()) EXPECT_FALSE(a.IsTell());
}

TEST(EngineTest, TellUpdatesKnowledgeWithNegativeInformation) {
  GameState state = TwoPlayerSetup(Cards({"W1", "W2", "Y1", "G3", "B5"}),
                                   Cards({"R1", "W1", "W2", "W3", "W4"}));
  const ActionOutcome out = state.Apply(Action::TellSuit(1, Suit::kRed));
  EXPECT_EQ(out.indicated_slots, 0b00001u);
  EXPECT_EQ(state.info_tokens(), 7);
  const Hand& hand = state.hand(1);
  EXPECT_TRUE(hand[0].knowledge.SuitKnown());
  EXPECT_EQ(hand[0].knowledge.KnownSuit(), Suit::kRed);
  for (int i = 1; i < 5; ++i) {
    EXPECT_FALSE(hand[i].knowledge.MaySuit(Suit::kRed));
    EXPECT_EQ(hand[i].knowledge.ranks, kAllMask);
  }
}

TEST(EngineTest, SuccessfulPlayAdvancesStackAndDraws) {
  GameState::Setup setup;
  setup.hands = {Cards({"W1", "W2", "Y1", "G3", "B5"}),
                 Cards({"R1", "R1", "R2", "W3", "W3"})};
  setup = CompleteSetup(setup, Cards({"G1"}));
  GameState state = GameState::FromSetup(setup);
  const ActionOutcome out = state.Apply(Action::Play(0));
  EXPECT_TRUE(out.success);
  EXPECT_TRUE(out.drew);
  EXPECT_EQ(out.card, C("W1"));
  EXPECT_EQ(state.stacks()[0], 1);
  EXPECT_EQ(state.Score(), 1);
  ASSERT_EQ(state.hand(0).size(), 5u);
  // Remaining cards shift left; the new card goes to the end.
  EXPECT_EQ(state.hand(0)[0].card, C("W2"));
  EXPECT_EQ(state.hand(0)[4].card, C("G1"));
  EXPECT_EQ(state.hand(0)[4].knowledge.suits, kAllMask);
  EXPECT_EQ(state.hand(0)[4].knowledge.drawn_turn, 0);
  EXPECT_EQ(state.current_player(), 1);
}

TEST(EngineTest, MisplayCostsLifeAndDiscards) {
  GameState state = TwoPlayerSetup(Cards({"W2", "W1", "Y1", "G3", "B5"}),
                                   Cards({"R1", "R1", "R2", "W3", "W3"}));
  const ActionOutcome out = state.Apply(Action::Play(0));
  EXPECT_FALSE(out.success);
  EXPECT_EQ(state.life_tokens(), 2);
  EXPECT_EQ(state.discard()[C("W2").Index()], 1);
  EXPECT_EQ(state.Score(), 0);
  EXPECT_EQ(state.info_tokens(), 8);
}

TEST(EngineTest, DiscardGainsInfo) {
  GameState state = TwoPlayerSetup(Cards({"W2", "W1", "Y1", "G3", "B5"}),
                                   Cards({"R1", "R1", "R2", "W3", "W3"}),
                                   /*info=*/3);
  state.Apply(Action::Discard(3));
  EXPECT_EQ(state.info_tokens(), 4);
  EXPECT_EQ(state.discard()[C("G3").Index()], 1);
}

TEST(EngineTest, CompletingStackGrantsCappedInfo) {
  Stacks stacks{};
  stacks[static_cast<int>(Suit::kBlue)] = 4;
  {
    GameState state = TwoPlayerSetup(Cards({"B5", "W1", "Y1", "G3", "R5"}),
                                     Cards({"R1", "R1", "R2", "W3", "W3"}),
                                     /*info=*/5, 3, stacks);
    state.Apply(Action::Play(0));
    EXPECT_EQ(state.info_tokens(), 6);
  }
  {
    GameState state = TwoPlayerSetup(Cards({"B5", "W1", "Y1", "G3", "R5"}),
                                     Cards({"R1", "R1", "R2", "W3", "W3"}),
                                     /*info=*/8, 3, stacks);
    state.Apply(Action::Play(0));
    EXPECT_EQ(state.info_tokens(), 8);
  }
}

TEST(EngineTest, LosingLastLifeEndsGameKeepingScore) {
  Stacks stacks{};
  stacks[0] = 3;
  GameState state = TwoPlayerSetup(Cards({"B3", "W1", "Y1", "G3", "R5"}),
                                   Cards({"R1", "R1", "R2", "W3", "W4"}),
                                   8, /*lives=*/1, stacks);
  state.Apply(Action::Play(0));
  EXPECT_TRUE(state.IsTerminal());
  EXPECT_EQ(state.life_tokens(), 0);
  EXPECT_EQ(state.Score(), 3);
}

TEST(EngineTest, PerfectScoreEndsImmediately) {
  Stacks stacks{5, 5, 5, 5, 4};
  GameState state = TwoPlayerSetup(Cards({"R5", "W1", "Y1", "G3", "B3"}),
                                   Cards({"R1", "R1", "R2", "W3", "W4"}), 8, 3,
                                   stacks);
  ASSERT_GT(state.deck_size(), 0);
  state.Apply(Action::Play(0));
  EXPECT_EQ(state.Score(), 25);
  EXPECT_TRUE(state.IsTerminal());
}

TEST(EngineTest, OneRoundAfterDeckEmpties) {
  for (int n = 2; n <= 5; ++n) {
    GameState::Setup setup;
    for (int p = 0; p < n; ++p) {
      const Suit suit = static_cast<Suit>(p);
      setup.hands.push_back({Card{suit, 1}, Card{suit, 2}});
    }
    setup.hand_size = 5;
    setup.info_tokens = 0;  // n + 1 discards stay under the cap
    GameState state = GameState::FromSetup(CompleteSetup(setup, {}, 1));
    ASSERT_EQ(state.deck_size(), 1);
    EXPECT_EQ(state.turns_since_deck_empty(), -1);
    state.Apply(Action::Discard(0));  // draws the last card
    EXPECT_EQ(state.deck_size(), 0);
    EXPECT_EQ(state.turns_since_deck_empty(), 0);
    int extra = 0;
    while (!state.IsTerminal()) {
      state.Apply(Action::Discard(0));
      ++extra;
    }
    EXPECT_EQ(extra, n) << n << " players";
  }
}

TEST(EngineTest, ErrorsLeaveStateUntouched) {
  GameState state = TwoPlayerSetup(Cards({"W2", "W1", "Y1", "G3", "B5"}),
                                   Cards({"R1", "R1", "R2", "W3", "W3"}));
  const GameState before = state;
  EXPECT_THROW(state.Apply(Action::Discard(0)), IllegalActionError);
  EXPECT_THROW(state.Apply(Action::TellSuit(1, Suit::kBlue)),
               IllegalActionError);
  EXPECT_THROW(state.LegalActions(1), TurnOrderError);
  EXPECT_TRUE(state == before);

  GameState dead = TwoPlayerSetup(Cards({"W2", "W1", "Y1", "G3", "B5"}),
                                  Cards({"R1", "R1", "R2", "W3", "W3"}), 8, 1);
  dead.Apply(Action::Play(0));
  ASSERT_TRUE(dead.IsTerminal());
  EXPECT_THROW(dead.Apply(Action::Play(0)), TerminalStateError);
  EXPECT_THROW(dead.LegalActions(), TerminalStateError);
}

TEST(EngineTest, ConfigValidation) {
  EXPECT_THROW(GameState::NewGame(1, 0), ConfigError);
  EXPECT_THROW(GameState::NewGame(6, 0), ConfigError);
  EXPECT_THROW(GameState::NewGame(5, 0, 11), ConfigError);
  GameState::Setup setup;
  setup.hands = {Cards({"W1"}), Cards({"W1"})};
  EXPECT_THROW(GameState::FromSetup(setup), ConfigError);  // missing cards
  setup = CompleteSetup(setup);
  setup.deck.push_back(C("W5"));
  EXPECT_THROW(GameState::FromSetup(setup), ConfigError);  // extra card
}

TEST(EngineTest, SeedDeterminesDeal) {
  const GameState a = GameState::NewGame(3, 99);
  const GameState b = GameState::NewGame(3, 99);
  const GameState c = GameState::NewGame(3, 100);
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a == c);
  EXPECT_EQ(a.CardInventory(), FullDeckCounts());
}

TEST(EngineTest, ObservationHidesOwnCards) {
  const GameState state = GameState::NewGame(3, 5);
  const Observation obs = state.Observe(1);
  EXPECT_THROW(obs.card(1, 0), std::out_of_range);
  EXPECT_EQ(obs.card(0, 0), state.hand(0)[0].card);
  CardCounts unseen = obs.UnseenCounts();
  int total = std::accumulate(unseen.begin(), unseen.end(), 0);
  EXPECT_EQ(total, kDeckSize - 10);  // two other hands of five
}

TEST(EngineTest, RandomPlayoutInvariants) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    GameState state = GameState::NewGame(n, seed);
    Rng rng(seed);
    int last_score = 0;
    while (!state.IsTerminal()) {
      const ActionList legal = state.LegalActions();
      ASSERT_FALSE(legal.empty());
      state.Apply(legal[UniformIndex(rng, static_cast<int>(legal.size()))]);
      ASSERT_EQ(state.CardInventory(), FullDeckCounts());
      ASSERT_GE(state.Score(), last_score);
      ASSERT_GE(state.info_tokens(), 0);
      ASSERT_LE(state.info_tokens(), 8);
      ASSERT_GE(state.life_tokens(), 0);
      last_score = state.Score();
    }
  }
}

TEST(TraceTest, LineFormat) {
  GameState state = TwoPlayerSetup(Cards({"W1", "W1", "Y1", "G3", "B5"}),
                                   Cards({"R1", "W1", "R2", "W3", "W3"}));
  state.Apply(Action::TellSuit(1, Suit::kRed));
  state.Apply(Action::Play(1));
  state.Apply(Action::Play(0));
  EXPECT_EQ(FormatTraceLine(state.history()[0]),
            "turn=0 player=0 action=Tell detail=to=1,suit=R outcome=slots=0,2 "
            "lives=3 info=7 score=0");
  EXPECT_EQ(FormatTraceLine(state.history()[1]),
            "turn=1 player=1 action=Play detail=slot=1 outcome=W1:hit "
            "lives=3 info=7 score=1");
  EXPECT_EQ(FormatTraceLine(state.history()[2]),
            "turn=2 player=0 action=Play detail=slot=0 outcome=W1:miss "
            "lives=2 info=7 score=1");
}

TEST(TraceTest, ReplayIsBitIdentical) {
  const GameState original = testing::RandomPlayout(4, 1234, 1000);
  std::stringstream buffer;
  WriteReplay(buffer, {4, 1234, 5}, original.history());
  const Replay replay = ReadReplay(buffer);
  EXPECT_EQ(replay.header, (ReplayHeader{4, 1234, 5}));
  const GameState again = RunReplay(replay);
  EXPECT_TRUE(again == original);
  std::stringstream a, b;
  WriteTrace(a, original.history());
  WriteTrace(b, again.history());
  EXPECT_EQ(a.str(), b.str());
}

TEST(TraceTest, MalformedReplayRejected) {
  std::stringstream empty;
  EXPECT_THROW(ReadReplay(empty), ConfigError);
  std::stringstream bad("players=2 seed=1\njump 3\n");
  EXPECT_THROW(ReadReplay(bad), ConfigError);
}

}  // namespace
}  // namespace hanabi
