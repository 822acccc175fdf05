#include "digroup/gsb_verifier.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace digroup {

namespace {

using CK = CompositionKind;
using RK = RuleKind;

FamilyTag intersection(RK f, RK g, Region r) { return {f, g, CK::Intersection, r}; }

}  // namespace

std::string to_string(const FamilyTag& tag) {
  std::string out = std::string(to_string(tag.f)) + "^" + std::string(to_string(tag.g)) + " " +
                    std::string(to_string(tag.kind));
  if (tag.region != Region::None) out += " " + std::string(to_string(tag.region));
  return out;
}

const std::vector<FamilyTag>& reference_families() {
  static const std::vector<FamilyTag> families = [] {
    using R = Region;
    std::vector<FamilyTag> out = {
        intersection(RK::S1, RK::S2, R::Overlap), intersection(RK::S1, RK::S3, R::Overlap),
        intersection(RK::S1, RK::T1, R::Right),   intersection(RK::S1, RK::T4, R::Right),
        intersection(RK::S2, RK::S1, R::Left),    intersection(RK::S2, RK::S1, R::Right),
        intersection(RK::S2, RK::S3, R::Left),    intersection(RK::S2, RK::T3, R::Left),
        intersection(RK::S2, RK::T3, R::Right),   intersection(RK::S3, RK::S3, R::Left),
        intersection(RK::S3, RK::S4, R::Left),    intersection(RK::S3, RK::S4, R::Right),
        intersection(RK::S3, RK::T2, R::Left),    intersection(RK::S4, RK::S1, R::Right),
        intersection(RK::S4, RK::S2, R::Overlap), intersection(RK::S4, RK::S3, R::Overlap),
        intersection(RK::S4, RK::S4, R::Right),   intersection(RK::S4, RK::T1, R::Right),
        intersection(RK::S4, RK::T2, R::Overlap), intersection(RK::S4, RK::T3, R::Right),
        intersection(RK::S4, RK::T4, R::Right),   intersection(RK::T1, RK::S3, R::Overlap),
        intersection(RK::T1, RK::S4, R::Right),   intersection(RK::T1, RK::T2, R::Overlap),
        intersection(RK::T2, RK::S2, R::Left),    intersection(RK::T2, RK::S3, R::Left),
        intersection(RK::T2, RK::T1, R::Left),    intersection(RK::T2, RK::T1, R::Right),
        intersection(RK::T2, RK::T4, R::Right),   intersection(RK::T3, RK::S3, R::Overlap),
        intersection(RK::T3, RK::S4, R::Right),   intersection(RK::T3, RK::T2, R::Overlap),
        intersection(RK::T4, RK::S2, R::Overlap), intersection(RK::T4, RK::S3, R::Overlap),
        {RK::T2, RK::S1, CK::Inclusion},          {RK::T4, RK::S1, CK::Inclusion},
        {RK::T4, RK::S2, CK::Inclusion},
    };
    const std::pair<RK, RK> multiplicative[] = {
        {RK::S3, RK::S4}, {RK::S3, RK::T1}, {RK::S3, RK::T3}, {RK::S4, RK::T2}, {RK::T2, RK::S4}};
    for (auto [f, g] : multiplicative) {
      out.push_back({f, g, CK::LeftMultInclusion});
      out.push_back({f, g, CK::RightMultInclusion});
    }
    return out;
  }();
  return families;
}

bool VerificationReport::pass() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  auto bad = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.reduced_to_zero; });
  return static_cast<std::size_t>(bad) + orientation_failures.size();
}

std::vector<FamilyTag> VerificationReport::missing_reference_families() const {
  std::vector<FamilyTag> out;
  for (const auto& tag : reference_families())
    if (!families_exercised.contains(tag)) out.push_back(tag);
  return out;
}

std::vector<RuleInstance> enumerate_rule_instances(const Alphabet& alphabet, std::size_t max_chain,
                                                   const RuleSet& rules) {
  return rules.instances(alphabet, max_chain);
}

namespace {

struct Work {
  const Alphabet& alphabet;
  std::size_t max_pad;
  const std::vector<RuleInstance>& instances;
  const std::vector<DiPoly>& polys;
  const std::vector<std::string>& labels;
  const SchemaBasis& basis;
};

CompositionEntry evaluate(const Work& work, std::string pair, FamilyTag family, Composition&& c) {
  CompositionEntry entry{std::move(pair), family, std::move(c.ambiguity), true, std::nullopt};
  try {
    DiPoly rem = reduce(c.value, work.basis);
    if (!rem.is_zero()) {
      entry.reduced_to_zero = false;
      entry.remainder = to_string(rem, work.alphabet);
    }
  } catch (const ReductionDiverged&) {
    entry.reduced_to_zero = false;
    entry.remainder = "<reduction diverged>";
  }
  return entry;
}

std::vector<CompositionEntry> check_instance(const Work& work, std::size_t i) {
  std::vector<CompositionEntry> out;
  const auto& fi = work.instances[i];
  for (auto& c : multiplication_compositions(work.polys[i], work.alphabet, work.max_pad)) {
    FamilyTag tag{fi.kind, fi.kind, c.kind, c.region};
    out.push_back(evaluate(work, work.labels[i], tag, std::move(c)));
  }
  for (std::size_t j = 0; j < work.instances.size(); ++j) {
    auto comps = pair_compositions(work.polys[i], work.polys[j], work.alphabet);
    if (comps.empty()) continue;
    std::string pair = work.labels[i] + " ^ " + work.labels[j];
    for (auto& c : comps) {
      FamilyTag tag{fi.kind, work.instances[j].kind, c.kind, c.region};
      out.push_back(evaluate(work, pair, tag, std::move(c)));
    }
  }
  return out;
}

}  // namespace

VerificationReport check_all(const Alphabet& alphabet, std::size_t max_chain, std::size_t max_pad,
                             const CheckOptions& options) {
  VerificationReport report{alphabet, max_chain, max_pad, 0, {}, {}, {}};
  const auto instances = enumerate_rule_instances(alphabet, max_chain, options.rules);
  report.instances_checked = instances.size();

  std::vector<DiPoly> polys;
  std::vector<std::string> labels;
  for (const auto& r : instances) {
    if (r.lhs <= r.rhs)
      report.orientation_failures.push_back(describe(r, alphabet) + ": lhs does not exceed rhs");
    polys.push_back(to_poly(r));
    labels.push_back(std::string(to_string(r.kind)) + " " + to_string(r.lhs, alphabet));
  }

  const SchemaBasis basis(options.rules);
  const Work work{alphabet, max_pad, instances, polys, labels, basis};
  std::vector<std::vector<CompositionEntry>> per_instance(instances.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, instances.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) per_instance[i] = check_instance(work, i);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t t = 0; t < jobs; ++t)
      workers.emplace_back([&, t] {
        for (std::size_t i = t; i < instances.size(); i += jobs) per_instance[i] = check_instance(work, i);
      });
  }

  for (auto& part : per_instance)
    for (auto& e : part) {
      report.families_exercised.insert(e.family);
      report.entries.push_back(std::move(e));
    }
  std::sort(report.entries.begin(), report.entries.end(), [](const auto& a, const auto& b) {
    if (a.family.kind != b.family.kind) return a.family.kind < b.family.kind;
    if (auto c = a.ambiguity <=> b.ambiguity; c != 0) return c < 0;
    return a.pair < b.pair;
  });
  return report;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "verdict: " << (report.pass() ? "PASS" : "FAIL") << '\n';
  out << "alphabet: ";
  for (std::size_t i = 0; i < report.alphabet.size(); ++i) out << (i ? "," : "") << report.alphabet.name(i);
  out << "\nmax-chain: " << report.max_chain << "\nmax-pad: " << report.max_pad << '\n';
  out << "rule instances: " << report.instances_checked << '\n';
  out << "compositions checked: " << report.entries.size() << '\n';

  std::map<CompositionKind, std::size_t> by_kind;
  for (const auto& e : report.entries) ++by_kind[e.family.kind];
  for (const auto& [kind, n] : by_kind) out << "  " << to_string(kind) << ": " << n << '\n';

  const auto missing = report.missing_reference_families();
  out << "reference families exercised: " << reference_families().size() - missing.size() << "/"
      << reference_families().size() << '\n';
  for (const auto& tag : missing) out << "  missing: " << to_string(tag) << '\n';

  for (const auto& f : report.orientation_failures) out << "orientation failure: " << f << '\n';
  for (const auto& e : report.entries) {
    if (e.reduced_to_zero) continue;
    out << "failure: " << e.pair << " | " << to_string(e.family.kind) << " | "
        << to_string(e.ambiguity, report.alphabet) << " | remainder " << *e.remainder << '\n';
  }
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["verdict"] = report.pass() ? "PASS" : "FAIL";
  j["checked"] = report.entries.size();
  j["instances"] = report.instances_checked;
  j["parameters"] = {{"alphabet", report.alphabet.names()},
                     {"max_chain", report.max_chain},
                     {"max_pad", report.max_pad}};
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : report.orientation_failures)
    failures.push_back({{"pair", f}, {"kind", "orientation"}, {"ambiguity", ""}, {"remainder", ""}});
  for (const auto& e : report.entries) {
    if (e.reduced_to_zero) continue;
    failures.push_back({{"pair", e.pair},
                        {"kind", std::string(to_string(e.family.kind))},
                        {"ambiguity", to_string(e.ambiguity, report.alphabet)},
                        {"remainder", *e.remainder}});
  }
  j["failures"] = std::move(failures);
  auto missing = nlohmann::ordered_json::array();
  for (const auto& tag : report.missing_reference_families()) missing.push_back(to_string(tag));
  j["families"] = {{"reference", reference_families().size()}, {"missing", std::move(missing)}};
  return j.dump(2) + "\n";
}

namespace mutations {

Schema t3_reversed() {
  auto make = [](Letter x) {
    return RuleInstance{RuleKind::T3, DiWord({Letter::unit(), x}, 1), DiWord({x, Letter::unit()}, 2), {x}};
  };
  return Schema{RuleKind::T3,
                [make](std::span<const Letter> w, std::size_t pos) -> std::optional<RuleInstance> {
                  if (pos + 1 < w.size() && w[pos].is_unit() && w[pos + 1].is_positive()) return make(w[pos + 1]);
                  return std::nullopt;
                },
                [make](const Alphabet& a, std::size_t) {
                  std::vector<RuleInstance> out;
                  for (Letter x : a.generators()) out.push_back(make(x));
                  return out;
                }};
}

}  // namespace mutations

}  // namespace digroup
