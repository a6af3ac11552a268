#include <doctest.h>

#include <random>

#include "epigraph/semantics.hpp"
#include "epigraph/translations.hpp"
#include "adf_ref.hpp"
#include "oracle.hpp"
#include "util.hpp"

using namespace epigraph;

namespace {

std::set<std::string> labelings_of(const DistributionSet& s) {
  std::set<std::string> out;
  for (const auto& p : s) out.insert(to_string(labeling_from_distribution(p)));
  return out;
}

std::set<std::string> as_strings(const std::vector<Labeling>& ls) {
  std::set<std::string> out;
  for (const auto& l : ls) out.insert(to_string(l));
  return out;
}

// Ternary satisfying distributions of the translation, read back as labelings.
struct Translated {
  std::set<std::string> sat, imax, imin;
};

Translated translated(const EpistemicGraph& eg) {
  DistributionSet R = apply_filter(satisfaction_semantics(eg, ValueSet::grid(2)), Filter::Ternary);
  return {labelings_of(R), labelings_of(select_extreme(R, Ordering::Information, Direction::Max)),
          labelings_of(select_extreme(R, Ordering::Information, Direction::Min))};
}

}  // namespace

TEST_CASE("five-statement ADF") {
  Adf adf = parse_adf(testutil::read_text("grd.adf"));
  REQUIRE(adf.names.size() == 5);
  CHECK(as_strings(adf_labelings(adf, AdfSemantics::Complete)) == std::set<std::string>{"uuuuu", "ttfft", "ftttf"});
  CHECK(as_strings(adf_labelings(adf, AdfSemantics::Grounded)) == std::set<std::string>{"uuuuu"});
  CHECK(as_strings(adf_labelings(adf, AdfSemantics::Preferred)) == std::set<std::string>{"ttfft", "ftttf"});
  auto ref = adfref::reference(adf);
  CHECK(ref.complete == std::set<std::string>{"uuuuu", "ttfft", "ftttf"});

  EpistemicGraph eg = adf_to_eg(adf);
  CHECK(eg.constraints.size() == 5);
  auto t = translated(eg);
  CHECK(t.sat == ref.complete);
  CHECK(t.imax == ref.preferred);
  CHECK(t.imin == ref.grounded);
  CHECK(adf.labels.size() == 9);
}

TEST_CASE("random ADFs correspond to their translations") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    Adf adf = adfref::random_adf(rng);
    int n = static_cast<int>(adf.names.size());
    validate_adf(adf);
    auto ref = adfref::reference(adf);
    CHECK(as_strings(adf_labelings(adf, AdfSemantics::Complete)) == ref.complete);
    CHECK(as_strings(adf_labelings(adf, AdfSemantics::Preferred)) == ref.preferred);
    CHECK(as_strings(adf_labelings(adf, AdfSemantics::Grounded)) == ref.grounded);
    for (const auto& v : adfref::all_labelings(n)) CHECK(gamma(adf, v) == adfref::ref_gamma(adf, v));
    auto t = translated(adf_to_eg(adf));
    CHECK(t.sat == ref.complete);
    CHECK(t.imax == ref.preferred);
    CHECK(t.imin == ref.grounded);
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("constrained attack graph") {
  // the thirteen ternary patterns, P1..P13, as labelings
  const std::vector<std::string> P{"uuuuu", "tuuuu", "tfuuu", "uftfu", "uutfu", "uuftu", "uuftf",
                                   "tutfu", "tftfu", "tuftu", "tuftf", "tfftu", "tfftf"};
  auto caf = testutil::load("cafx_nopc.eg");
  auto cafpc = testutil::load("cafx.eg");
  REQUIRE(cafpc.pc.has_value());

  auto plain = translated(caf_to_eg(caf));
  CHECK(plain.sat == std::set<std::string>(P.begin(), P.end()));
  CHECK(plain.imax == std::set<std::string>{P[8], P[12]});

  auto with_pc = translated(caf_to_eg(cafpc));
  std::set<std::string> kept(P.begin(), P.end());
  for (int i : {1, 2, 7, 8}) kept.erase(P[i]);
  CHECK(with_pc.sat == kept);
  CHECK(with_pc.sat.size() == 9);
  CHECK(with_pc.imax == std::set<std::string>{P[3], P[12]});

  // they match the admissible labelings computed on the attack graph
  CHECK(as_strings(caf_labelings(caf, CafSemantics::Admissible)) == plain.sat);
  CHECK(as_strings(caf_labelings(cafpc, CafSemantics::Admissible)) == with_pc.sat);
  CHECK(as_strings(caf_labelings(cafpc, CafSemantics::Preferred)) == with_pc.imax);

  // believed sets are the admissible extensions
  auto ext = caf_reference(caf, CafSemantics::Admissible);
  std::set<std::set<int>> believed;
  for (const auto& l : P) {
    std::set<int> in;
    for (int i = 0; i < 5; ++i)
      if (l[i] == 't') in.insert(i);
    believed.insert(in);
  }
  CHECK(std::set<std::set<int>>(ext.begin(), ext.end()) == believed);
  // A alone and A with C go once the pc applies
  auto ext_pc = caf_reference(cafpc, CafSemantics::Admissible);
  CHECK(std::find(ext_pc.begin(), ext_pc.end(), std::set<int>{0}) == ext_pc.end());
  CHECK(std::find(ext_pc.begin(), ext_pc.end(), std::set<int>{0, 2}) == ext_pc.end());
}
