// Copyright 2026 The pfpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfpower/fixtures.h"

#include "pfpower/errors.h"
#include "pfpower/spec_io.h"

namespace pfpower {
namespace {

// Seats and votes per bench. May 2021 groups the ten minority parties as a
// single IND player with their aggregated votes and resolves ties by votes;
// the bench periods from June on have no vote data and ties lose.
std::vector<PeriodFixture> MakeFixtures() {
  return {
  {
      /*label=*/"may_2021",
      /*title=*/"May 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "votes", "players": [{"id": "UNES", "weight": 49, "votes": 5060922}, {"id": "MUPP", "weight": 27, "votes": 2530803}, {"id": "ID", "weight": 18, "votes": 1808867}, {"id": "PSC", "weight": 18, "votes": 1615833}, {"id": "CREO", "weight": 12, "votes": 1509436}, {"id": "IND", "weight": 13, "votes": 2061845}]})json",
      /*mwec_count=*/34,
      /*mwec=*/{
        "{UNES} | {ID, PSC, CREO}, {MUPP, IND}, {UNES}",
        "{UNES} | {ID, CREO, IND}, {MUPP, PSC}, {UNES}",
        "{UNES} | {PSC, CREO, IND}, {MUPP, ID}, {UNES}",
        "{UNES} | {MUPP, CREO}, {ID, IND}, {UNES}, {PSC}",
        "{UNES} | {MUPP, CREO}, {ID, PSC}, {UNES}, {IND}",
        "{UNES} | {MUPP, CREO}, {PSC, IND}, {UNES}, {ID}",
        "{UNES} | {ID, IND}, {PSC, CREO}, {UNES}, {MUPP}",
        "{UNES} | {ID, PSC}, {CREO, IND}, {UNES}, {MUPP}",
        "{UNES} | {ID, CREO}, {PSC, IND}, {UNES}, {MUPP}",
        "{UNES, MUPP} | {ID, PSC, CREO, IND}, {UNES, MUPP}",
        "{UNES, ID} | {MUPP, PSC, IND}, {UNES, ID}, {CREO}",
        "{UNES, ID} | {MUPP, CREO, IND}, {UNES, ID}, {PSC}",
        "{UNES, ID} | {MUPP, PSC, CREO}, {UNES, ID}, {IND}",
        "{UNES, PSC} | {MUPP, ID, IND}, {UNES, PSC}, {CREO}",
        "{UNES, PSC} | {MUPP, ID, CREO}, {UNES, PSC}, {IND}",
        "{UNES, PSC} | {MUPP, CREO, IND}, {UNES, PSC}, {ID}",
        "{UNES, CREO} | {MUPP, ID, IND}, {UNES, CREO}, {PSC}",
        "{UNES, CREO} | {ID, PSC, IND}, {UNES, CREO}, {MUPP}",
        "{UNES, CREO} | {MUPP, PSC, IND}, {UNES, CREO}, {ID}",
        "{UNES, IND} | {MUPP, PSC, CREO}, {UNES, IND}, {ID}",
        "{UNES, IND} | {MUPP, ID, CREO}, {UNES, IND}, {PSC}",
        "{UNES, CREO, IND} | {UNES, CREO, IND}, {MUPP, ID, PSC}",
        "{MUPP, ID, PSC} | {MUPP, ID, PSC}, {UNES, CREO}, {IND}",
        "{MUPP, ID, PSC} | {MUPP, ID, PSC}, {UNES, IND}, {CREO}",
        "{MUPP, ID, PSC} | {MUPP, ID, PSC}, {CREO, IND}, {UNES}",
        "{MUPP, ID, CREO} | {MUPP, ID, CREO}, {PSC, IND}, {UNES}",
        "{MUPP, PSC, CREO} | {MUPP, PSC, CREO}, {ID, IND}, {UNES}",
        "{MUPP, ID, IND} | {MUPP, ID, IND}, {PSC, CREO}, {UNES}",
        "{MUPP, PSC, IND} | {MUPP, PSC, IND}, {ID, CREO}, {UNES}",
        "{MUPP, CREO, IND} | {MUPP, CREO, IND}, {ID, PSC}, {UNES}",
        "{ID, PSC, IND} | {ID, PSC, IND}, {MUPP, CREO}, {UNES}",
        "{MUPP, PSC, CREO, IND} | {MUPP, PSC, CREO, IND}, {UNES, ID}",
        "{MUPP, ID, CREO, IND} | {MUPP, ID, CREO, IND}, {UNES, PSC}",
        "{ID, PSC, CREO, IND} | {ID, PSC, CREO, IND}, {UNES}, {MUPP}",
      },
      /*ties=*/{
          {"{ID, PSC, IND}, {MUPP, CREO}, {UNES}", {49, 39, 49}},
          {"{ID, PSC, IND}, {UNES}, {MUPP}, {CREO}", {49, 49, 27, 12}},
      },
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.4510", "0.1078", "0.1176", "0.1176", "0.1054", "0.1005"}},
        {IndexKind::kPublicGood, {"0.2933", "0.1467", "0.1467", "0.1467", "0.1333", "0.1333"}},
        {IndexKind::kColomerMartinez, {"0.5496", "0.1415", "0.0944", "0.0944", "0.0572", "0.0630"}},
        {IndexKind::kHollerColomerMartinez, {"0.5334", "0.1470", "0.0980", "0.0980", "0.0594", "0.0643"}},
      },
      /*change_from_previous=*/std::nullopt,
  },
  {
      /*label=*/"jun_2021",
      /*title=*/"Jun 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "ties_lose", "players": [{"id": "UNES", "weight": 48}, {"id": "MUPP", "weight": 25}, {"id": "BAN", "weight": 25}, {"id": "ID", "weight": 16}, {"id": "PSC", "weight": 14}, {"id": "IND", "weight": 9}]})json",
      /*mwec_count=*/37,
      /*mwec=*/{
        "{UNES} | {MUPP, IND}, {BAN, PSC}, {UNES}, {ID}",
        "{UNES} | {MUPP, IND}, {BAN, ID}, {UNES}, {PSC}",
        "{UNES} | {MUPP, IND}, {ID, PSC}, {UNES}, {BAN}",
        "{UNES} | {MUPP, ID}, {BAN, IND}, {UNES}, {PSC}",
        "{UNES} | {MUPP, ID}, {BAN, PSC}, {UNES}, {IND}",
        "{UNES} | {MUPP, ID}, {PSC, IND}, {UNES}, {BAN}",
        "{UNES} | {MUPP, PSC}, {BAN, IND}, {UNES}, {ID}",
        "{UNES} | {MUPP, PSC}, {BAN, ID}, {UNES}, {IND}",
        "{UNES} | {MUPP, PSC}, {ID, IND}, {UNES}, {BAN}",
        "{UNES} | {BAN, IND}, {ID, PSC}, {UNES}, {MUPP}",
        "{UNES} | {BAN, ID}, {PSC, IND}, {UNES}, {MUPP}",
        "{UNES} | {BAN, PSC}, {ID, IND}, {UNES}, {MUPP}",
        "{UNES} | {ID, PSC, IND}, {UNES}, {MUPP}, {BAN}",
        "{UNES, BAN} | {MUPP, ID, PSC, IND}, {UNES, BAN}",
        "{UNES, MUPP} | {BAN, ID, PSC, IND}, {UNES, MUPP}",
        "{UNES, PSC} | {MUPP, BAN, IND}, {UNES, PSC}, {ID}",
        "{UNES, ID} | {MUPP, BAN, IND}, {UNES, ID}, {PSC}",
        "{UNES, PSC} | {MUPP, ID, IND}, {UNES, PSC}, {BAN}",
        "{UNES, IND} | {UNES, IND}, {MUPP, BAN}, {ID, PSC}",
        "{UNES, ID} | {UNES, ID}, {MUPP, BAN}, {PSC, IND}",
        "{UNES, PSC} | {UNES, PSC}, {MUPP, BAN}, {ID, IND}",
        "{UNES, ID} | {BAN, PSC, IND}, {UNES, ID}, {MUPP}",
        "{UNES, ID} | {MUPP, PSC, IND}, {UNES, ID}, {BAN}",
        "{UNES, PSC} | {BAN, ID, IND}, {UNES, PSC}, {MUPP}",
        "{UNES, IND} | {MUPP, ID, PSC}, {UNES, IND}, {BAN}",
        "{UNES, IND} | {BAN, ID, PSC}, {UNES, IND}, {MUPP}",
        "{MUPP, BAN} | {ID, PSC, IND}, {MUPP, BAN}, {UNES}",
        "{UNES, ID, IND} | {UNES, ID, IND}, {MUPP, BAN, PSC}",
        "{UNES, PSC, IND} | {UNES, PSC, IND}, {MUPP, BAN, ID}",
        "{MUPP, BAN, PSC} | {MUPP, BAN, PSC}, {UNES, IND}, {ID}",
        "{MUPP, BAN, ID} | {MUPP, BAN, ID}, {UNES, PSC}, {IND}",
        "{MUPP, BAN, ID} | {MUPP, BAN, ID}, {UNES, IND}, {PSC}",
        "{MUPP, ID, IND} | {MUPP, ID, IND}, {BAN, PSC}, {UNES}",
        "{MUPP, ID, PSC} | {MUPP, ID, PSC}, {BAN, IND}, {UNES}",
        "{BAN, ID, IND} | {BAN, ID, IND}, {MUPP, PSC}, {UNES}",
        "{BAN, ID, PSC} | {BAN, ID, PSC}, {MUPP, IND}, {UNES}",
        "{MUPP, BAN, PSC, IND} | {MUPP, BAN, PSC, IND}, {UNES, ID}",
      },
      /*ties=*/{
          {"{BAN, MUPP, PSC}, {UNES, ID}, {IND}", {64, 64, 9}},
          {"{BAN, PSC, IND}, {MUPP, ID}, {UNES}", {48, 41, 48}},
          {"{MUPP, PSC, IND}, {BAN, ID}, {UNES}", {48, 41, 48}},
          {"{BAN, PSC, IND}, {UNES}, {MUPP}, {ID}", {48, 48, 25, 16}},
          {"{MUPP, PSC, IND}, {UNES}, {BAN}, {ID}", {48, 48, 25, 16}},
      },
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.5450", "0.0788", "0.0788", "0.1171", "0.0968", "0.0833"}},
        {IndexKind::kPublicGood, {"0.3889", "0.1111", "0.1111", "0.1528", "0.1250", "0.1111"}},
        {IndexKind::kColomerMartinez, {"0.6560", "0.0889", "0.0889", "0.0791", "0.0546", "0.0326"}},
        {IndexKind::kHollerColomerMartinez, {"0.6346", "0.0944", "0.0944", "0.0831", "0.0595", "0.0340"}},
      },
      /*change_from_previous=*/std::nullopt,
  },
  {
      /*label=*/"jul_2021",
      /*title=*/"Jul 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "ties_lose", "players": [{"id": "UNES", "weight": 47}, {"id": "MUPP", "weight": 24}, {"id": "BAN", "weight": 25}, {"id": "ID", "weight": 16}, {"id": "PSC", "weight": 14}, {"id": "IND", "weight": 11}]})json",
      /*mwec_count=*/39,
      /*mwec=*/{},
      /*ties=*/{
          {"{BAN, MUPP, PSC}, {UNES, ID}, {IND}", {63, 63, 11}},
      },
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.5171", "0.0833", "0.0833", "0.1111", "0.1090", "0.0962"}},
        {IndexKind::kPublicGood, {"0.3590", "0.1154", "0.1154", "0.1410", "0.1410", "0.1282"}},
        {IndexKind::kColomerMartinez, {"0.6179", "0.0943", "0.0973", "0.0752", "0.0668", "0.0485"}},
        {IndexKind::kHollerColomerMartinez, {"0.5990", "0.0983", "0.1024", "0.0801", "0.0701", "0.0501"}},
      },
      /*change_from_previous=*/MembershipChange{{
          "{MUPP, PSC, IND} | {MUPP, PSC, IND}, {BAN, ID}, {UNES}",
          "{BAN, PSC, IND} | {BAN, PSC, IND}, {MUPP, ID}, {UNES}",
        }, {
        }},
  },
  {
      /*label=*/"oct12_2021",
      /*title=*/"12 Oct 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "ties_lose", "players": [{"id": "UNES", "weight": 47}, {"id": "MUPP", "weight": 25}, {"id": "BAN", "weight": 25}, {"id": "ID", "weight": 14}, {"id": "PSC", "weight": 14}, {"id": "IND", "weight": 12}]})json",
      /*mwec_count=*/40,
      /*mwec=*/{},
      /*ties=*/{},
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.4875", "0.1000", "0.1000", "0.1042", "0.1042", "0.1042"}},
        {IndexKind::kPublicGood, {"0.3293", "0.1341", "0.1341", "0.1341", "0.1341", "0.1341"}},
        {IndexKind::kColomerMartinez, {"0.5808", "0.1167", "0.1167", "0.0645", "0.0645", "0.0567"}},
        {IndexKind::kHollerColomerMartinez, {"0.5618", "0.1217", "0.1217", "0.0682", "0.0682", "0.0584"}},
      },
      /*change_from_previous=*/MembershipChange{{
          "{UNES, ID, PSC} | {UNES, ID, PSC}, {MUPP, BAN, IND}",
          "{BAN, MUPP, PSC} | {BAN, MUPP, PSC}, {UNES, ID}, {IND}",
          "{MUPP, BAN, IND} | {MUPP, BAN, IND}, {UNES, PSC}, {ID}",
          "{MUPP, BAN, IND} | {MUPP, BAN, IND}, {UNES, ID}, {PSC}",
        }, {
          "{UNES, PSC} | {MUPP, BAN, IND}, {UNES, PSC}, {ID}",
          "{UNES, ID} | {MUPP, BAN, IND}, {UNES, ID}, {PSC}",
          "{MUPP, BAN, PSC, IND} | {MUPP, BAN, PSC, IND}, {UNES, ID}",
        }},
  },
  {
      /*label=*/"oct26_2021",
      /*title=*/"26 Oct 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "ties_lose", "players": [{"id": "UNES", "weight": 47}, {"id": "MUPP", "weight": 25}, {"id": "BAN", "weight": 26}, {"id": "ID", "weight": 14}, {"id": "PSC", "weight": 14}, {"id": "IND", "weight": 11}]})json",
      /*mwec_count=*/40,
      /*mwec=*/{},
      /*ties=*/{},
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.4875", "0.1000", "0.1000", "0.1042", "0.1042", "0.1042"}},
        {IndexKind::kPublicGood, {"0.3293", "0.1341", "0.1341", "0.1341", "0.1341", "0.1341"}},
        {IndexKind::kColomerMartinez, {"0.5821", "0.1164", "0.1201", "0.0645", "0.0645", "0.0525"}},
        {IndexKind::kHollerColomerMartinez, {"0.5618", "0.1217", "0.1266", "0.0682", "0.0682", "0.0536"}},
      },
      /*change_from_previous=*/MembershipChange{{
        }, {
        }},
  },
  {
      /*label=*/"dec_2021",
      /*title=*/"Dec 21",
      /*document=*/R"json({"schema_version": 1, "form": "partition", "tie_rule": "ties_lose", "players": [{"id": "UNES", "weight": 47}, {"id": "MUPP", "weight": 25}, {"id": "BAN", "weight": 28}, {"id": "ID", "weight": 14}, {"id": "PSC", "weight": 14}, {"id": "IND", "weight": 9}]})json",
      /*mwec_count=*/39,
      /*mwec=*/{},
      /*ties=*/{
          {"{BAN, ID, PSC}, {UNES, IND}, {MUPP}", {56, 56, 25}},
      },
      /*indices=*/{
        {IndexKind::kDeeganPackel, {"0.4872", "0.1026", "0.1026", "0.1068", "0.1068", "0.0940"}},
        {IndexKind::kPublicGood, {"0.3250", "0.1375", "0.1375", "0.1375", "0.1375", "0.1250"}},
        {IndexKind::kColomerMartinez, {"0.5782", "0.1188", "0.1301", "0.0660", "0.0660", "0.0409"}},
        {IndexKind::kHollerColomerMartinez, {"0.5547", "0.1248", "0.1398", "0.0699", "0.0699", "0.0409"}},
      },
      /*change_from_previous=*/MembershipChange{{
        }, {
          "{UNES, IND} | {BAN, ID, PSC}, {UNES, IND}, {MUPP}",
        }},
  }
  };
}

}  // namespace

GameSpec PeriodFixture::Spec() const { return ParseSpec(document); }

const std::vector<std::string>& PeriodFixture::ExpectedIndex(
    IndexKind kind) const {
  for (const auto& [k, values] : indices) {
    if (k == kind) return values;
  }
  throw ValidationError("index", "fixture has no expected values for " +
                                     std::string(ToString(kind)));
}

const std::vector<PeriodFixture>& BundledFixtures() {
  static const std::vector<PeriodFixture> fixtures = MakeFixtures();
  return fixtures;
}

std::vector<std::string> FixtureLabels() {
  std::vector<std::string> labels;
  for (const auto& f : BundledFixtures()) labels.push_back(f.label);
  return labels;
}

const PeriodFixture& FindFixture(std::string_view label) {
  for (const auto& f : BundledFixtures()) {
    if (f.label == label) return f;
  }
  std::string known;
  for (const auto& l : FixtureLabels()) known += (known.empty() ? "" : ", ") + l;
  throw ValidationError("fixture", "unknown fixture '" + std::string(label) +
                                       "' (known: " + known + ")");
}

}  // namespace pfpower
