// Copyright 2026 The ocg Authors.
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

// ocg-workbench: analyze the commuting graph on odd-prime-order elements of
// one group, replay the expectation table over the whole suite, run the
// number-theory sweeps, or probe single-class connectivity.
//
// One JSON document per invocation goes to stdout; a human summary goes to
// stderr. Exit codes: 0 all pass, 1 expectation mismatch, 2 input or budget
// error. Without --timing the JSON is byte-identical across runs.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocg/catalog.hpp"
#include "ocg/commgraph.hpp"
#include "ocg/criteria.hpp"
#include "ocg/group.hpp"
#include "ocg/ntsweep.hpp"
#include "ocg/numtheory.hpp"

#ifndef OCG_DATA_DIR
#define OCG_DATA_DIR "data"
#endif

namespace {

using ordered_json = nlohmann::ordered_json;
using PrimeList = std::vector<uint64_t>;

// One expectation row: the frozen big/small classification of a suite
// group, with a provenance note naming the method that produced it.
struct SuiteRow {
  const char* key;
  ocg::GroupSpec::Family family;
  int n;
  uint32_t q;
  uint64_t order;
  std::vector<PrimeList> big;
  PrimeList small;
  const char* provenance;
};

const char* kOracleChecked =
    "component sweep cross-checked against the all-pairs oracle";
const char* kCatalogSweep = "component sweep over the catalog construction";
const char* kFileSweep = "component sweep over certified generator files";

const std::vector<SuiteRow>& suite_rows() {
  using F = ocg::GroupSpec::Family;
  static const std::vector<SuiteRow> rows = {
      {"alt5", F::Alternating, 5, 0, 60, {}, {3, 5}, kOracleChecked},
      {"alt6", F::Alternating, 6, 0, 360, {}, {3, 5}, kOracleChecked},
      {"alt7", F::Alternating, 7, 0, 2520, {{3}}, {5, 7}, kOracleChecked},
      {"alt8", F::Alternating, 8, 0, 20160, {{3, 5}}, {7}, kCatalogSweep},
      {"alt9", F::Alternating, 9, 0, 181440, {{3, 5}}, {7}, kCatalogSweep},
      {"alt10", F::Alternating, 10, 0, 1814400, {{3, 5, 7}}, {}, kCatalogSweep},
      {"psl2_5", F::Linear, 2, 5, 60, {}, {3, 5}, kOracleChecked},
      {"psl2_7", F::Linear, 2, 7, 168, {}, {3, 7}, kOracleChecked},
      {"psl2_8", F::Linear, 2, 8, 504, {}, {3, 7}, kOracleChecked},
      {"psl2_9", F::Linear, 2, 9, 360, {}, {3, 5}, kOracleChecked},
      {"psl2_11", F::Linear, 2, 11, 660, {}, {3, 5, 11}, kOracleChecked},
      {"psl2_13", F::Linear, 2, 13, 1092, {}, {3, 7, 13}, kOracleChecked},
      {"psl3_4", F::Linear, 3, 4, 20160, {}, {3, 5, 7}, kCatalogSweep},
      {"psu3_3", F::Unitary, 3, 3, 6048, {}, {3, 7}, kCatalogSweep},
      {"psu3_4", F::Unitary, 3, 4, 62400, {{3, 5}}, {13}, kCatalogSweep},
      {"sz8", F::File, 0, 0, 29120, {}, {5, 7, 13}, kFileSweep},
      {"m11", F::File, 0, 0, 7920, {}, {3, 5, 11}, kFileSweep},
      {"m12", F::File, 0, 0, 95040, {{3}}, {5, 11}, kFileSweep},
      {"m22", F::File, 0, 0, 443520, {{3}}, {5, 7, 11}, kFileSweep},
      {"j1", F::File, 0, 0, 175560, {}, {3, 5, 7, 11, 19}, kFileSweep},
      {"j2", F::File, 0, 0, 604800, {{3, 5}}, {7}, kFileSweep},
  };
  return rows;
}

const SuiteRow* find_row(const std::string& key) {
  for (const SuiteRow& r : suite_rows()) {
    if (key == r.key) return &r;
  }
  return nullptr;
}

ocg::GroupSpec spec_for_row(const SuiteRow& row, const std::string& data_dir) {
  ocg::GroupSpec spec;
  spec.name = row.key;
  spec.family = row.family;
  spec.n = row.n;
  spec.q = row.q;
  if (row.family == ocg::GroupSpec::Family::File) {
    spec.path = data_dir + "/" + row.key + ".grp";
  }
  spec.expected_order = row.order;
  return spec;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

ocg::GroupSpec resolve_group(const std::string& family, int n, int64_t q,
                             const std::string& file) {
  ocg::GroupSpec spec;
  if (!file.empty()) {
    spec.family = ocg::GroupSpec::Family::File;
    spec.path = file;
    std::string base = file.substr(file.find_last_of('/') + 1);
    if (base.size() > 4 && base.substr(base.size() - 4) == ".grp") {
      base.resize(base.size() - 4);
    }
    spec.name = base;
    return spec;
  }
  if (family.empty()) {
    throw std::invalid_argument(
        "pass --family with --n (and --q), or --file PATH");
  }
  std::string f = lower(family);
  auto need_n = [&] {
    if (n <= 0) throw std::invalid_argument("--family " + f + " needs --n");
  };
  auto need_q = [&] {
    if (q <= 0) throw std::invalid_argument("--family " + f + " needs --q");
  };
  if (f == "alt" || f == "alternating") {
    need_n();
    spec.family = ocg::GroupSpec::Family::Alternating;
    spec.name = "alt" + std::to_string(n);
  } else if (f == "psl" || f == "linear") {
    need_n();
    need_q();
    spec.family = ocg::GroupSpec::Family::Linear;
    spec.name = "psl" + std::to_string(n) + "_" + std::to_string(q);
  } else if (f == "psu" || f == "unitary") {
    need_n();
    need_q();
    spec.family = ocg::GroupSpec::Family::Unitary;
    spec.name = "psu" + std::to_string(n) + "_" + std::to_string(q);
  } else if (f == "sp" || f == "symplectic") {
    need_n();
    need_q();
    spec.family = ocg::GroupSpec::Family::Symplectic;
    spec.name = "sp" + std::to_string(n) + "_" + std::to_string(q);
  } else {
    throw std::invalid_argument("unknown --family: " + family);
  }
  spec.n = n;
  spec.q = static_cast<uint32_t>(q);
  if (const SuiteRow* row = find_row(spec.name)) {
    spec.expected_order = row->order;
  }
  return spec;
}

// A bare --file name that does not resolve from the working directory is
// retried inside the data directory.
void apply_data_dir(ocg::GroupSpec& spec, const std::string& data_dir) {
  if (spec.family != ocg::GroupSpec::Family::File) return;
  if (std::ifstream(spec.path).good()) return;
  if (spec.path.find('/') == std::string::npos) {
    spec.path = data_dir + "/" + spec.path;
  }
}

PrimeList parse_rho(const std::string& text) {
  PrimeList out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    size_t end = comma == std::string::npos ? text.size() : comma;
    std::string tok = text.substr(pos, end - pos);
    uint64_t p = 0;
    try {
      size_t used = 0;
      p = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --rho entry: '" + tok + "'");
    }
    if (p < 3 || p % 2 == 0 || !ocg::is_prime(p)) {
      throw std::invalid_argument("--rho entries must be odd primes: " + tok);
    }
    out.push_back(p);
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join(const PrimeList& v, const char* sep = " ") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string set_text(const PrimeList& v) { return "{" + join(v, ",") + "}"; }

std::string big_text(const std::vector<PrimeList>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += set_text(v[i]);
  }
  return out + "]";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Component sweep plus classification, with the resulting big order sets
// (sorted) and the union of small order sets.
struct Analysis {
  ocg::VertexIndex X;
  ocg::ComponentPartition part;
  PrimeList rho_used;
  PrimeList rho_ignored;
  std::vector<PrimeList> got_big;
  PrimeList got_small;

  explicit Analysis(ocg::VertexIndex x) : X(std::move(x)) {}
};

Analysis analyze_components(const ocg::GroupHandle& G,
                            const std::vector<ocg::ConjugacyClass>& classes,
                            const PrimeList& requested) {
  PrimeList used, ignored;
  if (requested.empty()) {
    used = ocg::odd_prime_factors(G.order);
  } else {
    for (uint64_t p : requested) {
      (G.order % p == 0 ? used : ignored).push_back(p);
    }
  }
  Analysis a(ocg::vertex_set(G, used, classes));
  a.rho_used = std::move(used);
  a.rho_ignored = std::move(ignored);
  if (a.X.size() > 0) {
    a.part = ocg::components(G, a.X);
    ocg::classify(a.part, G, a.X);
  } else {
    a.part.classified = true;
  }
  std::set<uint64_t> small;
  for (const ocg::ComponentInfo& c : a.part.components) {
    if (c.big) {
      a.got_big.push_back(c.order_set);
    } else {
      small.insert(c.order_set.begin(), c.order_set.end());
    }
  }
  std::sort(a.got_big.begin(), a.got_big.end());
  a.got_small.assign(small.begin(), small.end());
  return a;
}

ordered_json components_json(const ocg::ComponentPartition& part) {
  // Aggregate by (big, size, order set, fingerprint); big first, then
  // larger sizes, so the one big component of a suite group leads.
  using Sig = std::tuple<int, int64_t, PrimeList,
                         std::vector<std::array<uint64_t, 3>>>;
  std::map<Sig, uint64_t> agg;
  for (const ocg::ComponentInfo& c : part.components) {
    Sig sig{c.big ? 0 : 1, -static_cast<int64_t>(c.size), c.order_set,
            c.fingerprint};
    ++agg[sig];
  }
  ordered_json arr = ordered_json::array();
  for (const auto& [sig, count] : agg) {
    ordered_json e;
    e["size"] = static_cast<uint64_t>(-std::get<1>(sig));
    e["big"] = std::get<0>(sig) == 0;
    e["count"] = count;
    e["orders"] = std::get<2>(sig);
    ordered_json fp = ordered_json::array();
    for (const auto& row : std::get<3>(sig)) {
      fp.push_back({row[0], row[1], row[2]});
    }
    e["fingerprint"] = fp;
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json prime_links_json(const ocg::PrimeLinkGraph& links) {
  ordered_json j;
  j["primes"] = links.primes;
  ordered_json edges = ordered_json::array();
  for (size_t i = 0; i < links.primes.size(); ++i) {
    for (size_t k = 0; k < links.primes.size(); ++k) {
      if (i != k && links.edge[i][k]) {
        edges.push_back({links.primes[i], links.primes[k]});
      }
    }
  }
  j["edges"] = edges;
  std::map<uint32_t, PrimeList> blocks;
  for (size_t i = 0; i < links.primes.size(); ++i) {
    blocks[links.component_of[i]].push_back(links.primes[i]);
  }
  ordered_json block_arr = ordered_json::array();
  for (const auto& [id, primes] : blocks) block_arr.push_back(primes);
  j["blocks"] = block_arr;
  return j;
}

ordered_json criterion_json(const ocg::CriterionReport& rep) {
  ordered_json j;
  j["criterion"] = rep.criterion;
  j["verdict"] = rep.verdict;
  ordered_json nums = ordered_json::object();
  for (const auto& [k, v] : rep.numbers) nums[k] = v;
  j["numbers"] = std::move(nums);
  if (!rep.subgroups.empty()) {
    ordered_json subs = ordered_json::object();
    for (const auto& [k, H] : rep.subgroups) subs[k] = H.order;
    j["subgroup_orders"] = std::move(subs);
  }
  if (!rep.elements.empty()) {
    ordered_json els = ordered_json::object();
    for (const auto& [k, x] : rep.elements) els[k] = ocg::format_cycles(x);
    j["witnesses"] = std::move(els);
  }
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

int64_t ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const ordered_json& doc, const std::string& format,
          const std::string& csv) {
  if (format == "csv") {
    std::cout << csv;
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

struct AnalyzeOpts {
  std::string family;
  int n = 0;
  int64_t q = 0;
  std::string file;
  std::string rho;
  uint64_t budget = ocg::kDefaultElementBudget;
  std::string format = "json";
  bool timing = false;
  std::string data_dir = OCG_DATA_DIR;
};

int cmd_analyze(const AnalyzeOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  ocg::GroupSpec spec = resolve_group(o.family, o.n, o.q, o.file);
  apply_data_dir(spec, o.data_dir);
  ocg::GroupHandle G = ocg::load_group(spec, o.budget);
  int64_t build_ms = ms_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  std::vector<ocg::ConjugacyClass> classes = ocg::conjugacy_classes(G);
  int64_t classes_ms = ms_since(t1);

  auto t2 = std::chrono::steady_clock::now();
  Analysis a = analyze_components(G, classes, parse_rho(o.rho));
  int64_t components_ms = ms_since(t2);

  ordered_json doc;
  doc["command"] = "analyze";
  doc["group"] = {{"name", spec.name},
                  {"degree", G.degree},
                  {"order", G.order}};
  doc["rho"] = a.rho_used;
  if (!a.rho_ignored.empty()) doc["rho_ignored"] = a.rho_ignored;
  doc["vertices"] = a.X.size();
  doc["component_count"] = a.part.components.size();
  doc["components"] = components_json(a.part);
  doc["prime_links"] = prime_links_json(ocg::prime_link_graph(classes, G.order));

  auto t3 = std::chrono::steady_clock::now();
  ordered_json crits = ordered_json::array();
  for (uint64_t p : a.rho_used) {
    ordered_json e;
    e["p"] = p;
    ocg::CriterionReport local = ocg::p_local_criterion(G, p, classes);
    e["p_core_order"] = local.numbers.at("p_core_order");
    uint64_t sylow = ocg::p_part(G.order, p);
    e["sylow_order"] = sylow;
    if (sylow <= ocg::kMaxSylowForEnumeration) {
      ocg::CriterionReport rep = ocg::bender_equivalence(G, p, classes);
      e["connected"] = rep.numbers.at("connected") == 1;
      e["generated_order"] = rep.numbers.at("generated_order");
      if (rep.numbers.count("strongly_embedded")) {
        e["strongly_p_embedded"] = rep.numbers.at("strongly_embedded") == 1;
      }
    } else {
      e["skipped"] = "sylow order exceeds the subgroup enumeration cap";
    }
    crits.push_back(std::move(e));
  }
  doc["criteria"] = std::move(crits);

  bool has_big = !a.got_big.empty();
  if (has_big) {
    doc["centralizer_scan"] =
        criterion_json(ocg::nonabelian_centralizer_scan(G, a.X, a.part));
    doc["small_component_check"] =
        criterion_json(ocg::small_component_corollary(G, a.X, a.part));
  }
  int64_t criteria_ms = ms_since(t3);

  const SuiteRow* row = find_row(spec.name);
  bool expected_rho = a.rho_ignored.empty() &&
                      a.rho_used == ocg::odd_prime_factors(G.order);
  bool pass = true;
  if (row && expected_rho) {
    pass = a.got_big == row->big && a.got_small == row->small;
    ordered_json exp;
    exp["key"] = row->key;
    exp["pass"] = pass;
    exp["expected_big"] = row->big;
    exp["expected_small"] = row->small;
    exp["computed_big"] = a.got_big;
    exp["computed_small"] = a.got_small;
    doc["expectation"] = std::move(exp);
  }
  if (o.timing) {
    doc["timing"] = {{"build_ms", build_ms},
                     {"classes_ms", classes_ms},
                     {"components_ms", components_ms},
                     {"criteria_ms", criteria_ms},
                     {"total_ms", ms_since(t0)}};
  }

  std::string csv = "size,big,count,orders\n";
  for (const auto& e : doc["components"]) {
    PrimeList orders = e["orders"].get<PrimeList>();
    csv += std::to_string(e["size"].get<uint64_t>()) + "," +
           (e["big"].get<bool>() ? "true" : "false") + "," +
           std::to_string(e["count"].get<uint64_t>()) + "," +
           csv_field(join(orders)) + "\n";
  }
  emit(doc, o.format, csv);

  std::cerr << spec.name << ": order " << G.order << ", " << a.X.size()
            << " vertices, " << a.part.components.size() << " components, "
            << a.got_big.size() << " big " << big_text(a.got_big)
            << ", small primes " << set_text(a.got_small) << "\n";
  if (row && expected_rho) {
    std::cerr << "expectation " << (pass ? "ok" : "MISMATCH") << " for "
              << row->key << "\n";
  }
  return pass ? 0 : 1;
}

struct VerifyOpts {
  std::string only;
  std::string corrupt;
  uint64_t budget = ocg::kDefaultElementBudget;
  int jobs = 1;
  std::string format = "json";
  bool timing = false;
  std::string data_dir = OCG_DATA_DIR;
};

struct RowOutcome {
  ordered_json json;
  std::string human;
  bool pass = false;
  bool error = false;
};

RowOutcome run_row(const SuiteRow& row, bool corrupt,
                   const VerifyOpts& o) {
  RowOutcome out;
  auto t0 = std::chrono::steady_clock::now();
  std::vector<PrimeList> want_big = row.big;
  PrimeList want_small = row.small;
  if (corrupt) want_small.push_back(17);

  ocg::GroupSpec spec = spec_for_row(row, o.data_dir);
  ocg::GroupHandle G = ocg::load_group(spec, o.budget);
  std::vector<ocg::ConjugacyClass> classes = ocg::conjugacy_classes(G);
  Analysis a = analyze_components(G, classes, {});

  bool unique_big = a.got_big.size() <= 1;
  out.pass = a.got_big == want_big && a.got_small == want_small && unique_big;

  ordered_json j;
  j["key"] = row.key;
  j["order"] = G.order;
  j["degree"] = G.degree;
  j["expected_big"] = want_big;
  j["expected_small"] = want_small;
  j["computed_big"] = a.got_big;
  j["computed_small"] = a.got_small;
  j["big_components"] = a.got_big.size();
  j["unique_big"] = unique_big;
  j["pass"] = out.pass;
  j["provenance"] = row.provenance;
  if (!out.pass) {
    j["diff"] = "expected big " + big_text(want_big) + " small " +
                set_text(want_small) + ", computed big " + big_text(a.got_big) +
                " small " + set_text(a.got_small);
  }
  if (o.timing) j["ms"] = ms_since(t0);
  out.json = std::move(j);

  std::ostringstream h;
  h << (out.pass ? "ok   " : "FAIL ") << row.key << " (order " << G.order
    << "): big " << big_text(a.got_big) << ", small "
    << set_text(a.got_small);
  if (!out.pass) {
    h << " [expected big " << big_text(want_big) << ", small "
      << set_text(want_small) << "]";
  }
  out.human = h.str();
  return out;
}

int cmd_verify_tables(const VerifyOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<const SuiteRow*> rows;
  if (o.only.empty()) {
    for (const SuiteRow& r : suite_rows()) rows.push_back(&r);
  } else {
    size_t pos = 0;
    while (pos < o.only.size()) {
      size_t comma = o.only.find(',', pos);
      size_t end = comma == std::string::npos ? o.only.size() : comma;
      std::string key = o.only.substr(pos, end - pos);
      const SuiteRow* r = find_row(key);
      if (!r) throw std::invalid_argument("unknown suite key: '" + key + "'");
      rows.push_back(r);
      pos = end + 1;
    }
  }
  if (!o.corrupt.empty() && !find_row(o.corrupt)) {
    throw std::invalid_argument("unknown suite key: '" + o.corrupt + "'");
  }

  std::vector<RowOutcome> outcomes(rows.size());
  std::atomic<size_t> next{0};
  int jobs = std::clamp<int>(o.jobs, 1, static_cast<int>(rows.size()));
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        outcomes[i] = run_row(*rows[i], rows[i]->key == o.corrupt, o);
      } catch (const std::exception& e) {
        outcomes[i].error = true;
        outcomes[i].json = {{"key", rows[i]->key}, {"error", e.what()}};
        outcomes[i].human =
            std::string("ERROR ") + rows[i]->key + ": " + e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  size_t passed = 0;
  bool any_error = false;
  ordered_json row_arr = ordered_json::array();
  for (const RowOutcome& out : outcomes) {
    row_arr.push_back(out.json);
    passed += out.pass ? 1 : 0;
    any_error = any_error || out.error;
  }
  bool all_pass = passed == outcomes.size();

  ordered_json doc;
  doc["command"] = "verify-tables";
  if (!o.corrupt.empty()) doc["corrupted_row"] = o.corrupt;
  doc["rows"] = std::move(row_arr);
  doc["row_count"] = outcomes.size();
  doc["rows_passed"] = passed;
  doc["pass"] = all_pass;
  if (o.timing) doc["timing"] = {{"total_ms", ms_since(t0)}};

  std::string csv =
      "key,order,pass,expected_big,computed_big,expected_small,"
      "computed_small\n";
  for (const RowOutcome& out : outcomes) {
    if (out.error) {
      csv += out.json["key"].get<std::string>() + ",,false,,,,\n";
      continue;
    }
    auto bigs = [](const ordered_json& lists) {
      std::string s;
      for (size_t i = 0; i < lists.size(); ++i) {
        if (i) s += "|";
        s += join(lists[i].get<PrimeList>());
      }
      return s;
    };
    csv += out.json["key"].get<std::string>() + "," +
           std::to_string(out.json["order"].get<uint64_t>()) + "," +
           (out.json["pass"].get<bool>() ? "true" : "false") + "," +
           csv_field(bigs(out.json["expected_big"])) + "," +
           csv_field(bigs(out.json["computed_big"])) + "," +
           csv_field(join(out.json["expected_small"].get<PrimeList>())) + "," +
           csv_field(join(out.json["computed_small"].get<PrimeList>())) + "\n";
  }
  emit(doc, o.format, csv);

  for (const RowOutcome& out : outcomes) std::cerr << out.human << "\n";
  std::cerr << passed << "/" << outcomes.size() << " rows pass\n";
  if (any_error) return 2;
  return all_pass ? 0 : 1;
}

struct NtOpts {
  uint64_t qmax = 128;
  uint64_t nmax = 24;
  uint64_t sweep_qmax = 10000;
  uint64_t xmax = 1000;
  std::string format = "json";
  bool timing = false;
};

int cmd_nt_verify(const NtOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ocg::SweepCheck> checks;
  checks.push_back(ocg::zsigmondy_oracle_sweep(o.qmax, o.nmax));
  for (ocg::SweepCheck& c : ocg::smooth_neighborhood_sweeps(o.sweep_qmax)) {
    checks.push_back(std::move(c));
  }
  for (ocg::SweepCheck& c : ocg::cyclotomic_pattern_sweeps(o.xmax, o.nmax)) {
    checks.push_back(std::move(c));
  }
  bool all_pass = true;
  ordered_json arr = ordered_json::array();
  std::string csv = "name,pass,cases,detail\n";
  for (const ocg::SweepCheck& c : checks) {
    all_pass = all_pass && c.pass;
    arr.push_back({{"name", c.name},
                   {"pass", c.pass},
                   {"cases", c.cases},
                   {"detail", c.detail}});
    csv += c.name + "," + (c.pass ? "true" : "false") + "," +
           std::to_string(c.cases) + "," + csv_field(c.detail) + "\n";
    std::cerr << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.cases
              << " cases): " << c.detail << "\n";
  }
  ordered_json doc;
  doc["command"] = "nt-verify";
  doc["ranges"] = {{"qmax", o.qmax},
                   {"nmax", o.nmax},
                   {"sweep_qmax", o.sweep_qmax},
                   {"xmax", o.xmax}};
  doc["checks"] = std::move(arr);
  doc["pass"] = all_pass;
  if (o.timing) doc["timing"] = {{"total_ms", ms_since(t0)}};
  emit(doc, o.format, csv);
  std::cerr << (all_pass ? "all sweeps pass" : "sweep failures") << "\n";
  return all_pass ? 0 : 1;
}

struct ClassOpts {
  std::string family;
  int n = 0;
  int64_t q = 0;
  std::string file;
  uint64_t order = 0;
  uint64_t budget = ocg::kDefaultElementBudget;
  std::string format = "json";
  bool timing = false;
  std::string data_dir = OCG_DATA_DIR;
};

int cmd_class_connected(const ClassOpts& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.order < 3 || o.order % 2 == 0 || !ocg::is_prime(o.order)) {
    throw std::invalid_argument("--order must be an odd prime");
  }
  ocg::GroupSpec spec = resolve_group(o.family, o.n, o.q, o.file);
  apply_data_dir(spec, o.data_dir);
  ocg::GroupHandle G = ocg::load_group(spec, o.budget);
  std::vector<ocg::ConjugacyClass> classes = ocg::conjugacy_classes(G);

  ordered_json arr = ordered_json::array();
  std::string csv = "index,size,centralizer_order,connected\n";
  uint64_t index = 0;
  for (const ocg::ConjugacyClass& cls : classes) {
    if (cls.element_order != o.order) continue;
    bool connected = ocg::class_connected(G, cls);
    arr.push_back({{"index", index},
                   {"representative", ocg::format_cycles(cls.representative)},
                   {"size", cls.size},
                   {"centralizer_order", cls.centralizer.order},
                   {"connected", connected}});
    csv += std::to_string(index) + "," + std::to_string(cls.size) + "," +
           std::to_string(cls.centralizer.order) + "," +
           (connected ? "true" : "false") + "\n";
    std::cerr << "class " << index << ": size " << cls.size
              << ", centralizer order " << cls.centralizer.order << ", "
              << (connected ? "connected" : "disconnected") << "\n";
    ++index;
  }
  ordered_json doc;
  doc["command"] = "class-connected";
  doc["group"] = {{"name", spec.name},
                  {"degree", G.degree},
                  {"order", G.order}};
  doc["element_order"] = o.order;
  doc["class_count"] = index;
  doc["classes"] = std::move(arr);
  if (o.timing) doc["timing"] = {{"total_ms", ms_since(t0)}};
  emit(doc, o.format, csv);
  if (index == 0) {
    std::cerr << "no classes of order " << o.order << " in " << spec.name
              << "\n";
  }
  return 0;
}

void add_group_ref(CLI::App* cmd, std::string& family, int& n, int64_t& q,
                   std::string& file) {
  auto* fam = cmd->add_option("--family", family,
                              "group family: alt, psl, psu, sp");
  cmd->add_option("--n", n, "degree (alt) or matrix dimension");
  cmd->add_option("--q", q, "field size for matrix families");
  cmd->add_option("--file", file, "group file path")->excludes(fam);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"commuting graphs on elements of odd prime order"};
  app.require_subcommand(1);

  AnalyzeOpts an;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "component analysis and criteria for one group");
  add_group_ref(analyze, an.family, an.n, an.q, an.file);
  analyze->add_option("--rho", an.rho,
                      "comma list of odd primes (default: all dividing |G|)");
  analyze->add_option("--budget", an.budget, "element enumeration cap");
  analyze->add_option("--format", an.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  analyze->add_flag("--timing", an.timing, "include wall-clock timings");
  analyze->add_option("--data-dir", an.data_dir, "directory for group files");

  VerifyOpts vt;
  CLI::App* verify = app.add_subcommand(
      "verify-tables", "replay the expectation table over the suite");
  verify->add_option("--only", vt.only, "comma list of suite keys");
  verify->add_option("--corrupt", vt.corrupt,
                     "flip one expectation row (self-test)");
  verify->add_option("--budget", vt.budget, "element enumeration cap");
  verify->add_option("--jobs", vt.jobs, "parallel group analyses");
  verify->add_option("--format", vt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timing", vt.timing, "include wall-clock timings");
  verify->add_option("--data-dir", vt.data_dir, "directory for group files");

  NtOpts nt;
  CLI::App* ntv = app.add_subcommand(
      "nt-verify", "number-theory sweeps against independent oracles");
  ntv->add_option("--qmax", nt.qmax, "prime power bound for the oracle sweep");
  ntv->add_option("--nmax", nt.nmax, "exponent bound");
  ntv->add_option("--sweep-qmax", nt.sweep_qmax,
                  "prime power bound for the smooth neighborhood lists");
  ntv->add_option("--xmax", nt.xmax,
                  "prime bound for the cyclotomic pattern lists");
  ntv->add_option("--format", nt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  ntv->add_flag("--timing", nt.timing, "include wall-clock timings");

  ClassOpts cc;
  CLI::App* cls = app.add_subcommand(
      "class-connected", "per-class connectivity at one element order");
  add_group_ref(cls, cc.family, cc.n, cc.q, cc.file);
  cls->add_option("--order", cc.order, "element order (odd prime)")
      ->required();
  cls->add_option("--budget", cc.budget, "element enumeration cap");
  cls->add_option("--format", cc.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cls->add_flag("--timing", cc.timing, "include wall-clock timings");
  cls->add_option("--data-dir", cc.data_dir, "directory for group files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(an);
    if (verify->parsed()) return cmd_verify_tables(vt);
    if (ntv->parsed()) return cmd_nt_verify(nt);
    if (cls->parsed()) return cmd_class_connected(cc);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
