#ifndef RESLAT_CLI_APP_HPP
#define RESLAT_CLI_APP_HPP

// Command-line front door. Verbs: verify, report, quotient, product,
// decompose, enumerate, check-laws. Exit codes: 0 ok, 1 verification or
// analysis failure, 2 usage/parse error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "reslat/enumerate.hpp"
#include "reslat/io.hpp"
#include "reslat/laws.hpp"
#include "reslat/products.hpp"

namespace reslat {

namespace cli {

inline long long size_cap_from_env() {
  const char* raw = std::getenv("RESLAT_SIZE_CAP");
  if (!raw || !*raw) return 4096;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1)
    throw std::runtime_error("RESLAT_SIZE_CAP must be a positive integer, got \"" +
                             std::string(raw) + "\"");
  return v;
}

// Split a --filter argument into labels. ';' takes precedence so tuple labels
// such as "(0,1)" stay usable; otherwise ',' separates.
inline std::vector<std::string> split_labels(const std::string& arg) {
  const char sep = arg.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> out;
  std::string cur;
  for (char ch : arg) {
    if (ch == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline nlohmann::ordered_json filters_json(const Algebra& A,
                                           const std::vector<FilterSet>& filters) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const FilterSet& F : filters) {
    nlohmann::ordered_json f;
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (Element a : F.elements()) members.push_back(A.label(a));
    f["members"] = std::move(members);
    f["proper"] = is_proper(A, F);
    arr.push_back(std::move(f));
  }
  return arr;
}

inline nlohmann::ordered_json label_array(const Algebra& A,
                                          const std::vector<Element>& xs) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (Element a : xs) arr.push_back(A.label(a));
  return arr;
}

// Everything cmd_report prints, gathered in deterministic order.
inline nlohmann::ordered_json build_report(const Algebra& A) {
  nlohmann::ordered_json rep;
  rep["name"] = A.name;
  rep["order"] = A.n;
  rep["elements"] = A.labels;
  rep["filters"] = filters_json(A, all_filters(A));
  rep["spec"] = filters_json(A, spec(A));
  rep["max"] = filters_json(A, max_filters(A));
  rep["radical"] = label_array(A, radical(A).elements());
  rep["dense"] = label_array(A, dense_filter(A).elements());
  rep["boolean_center"] = label_array(A, boolean_center(A).members);

  const LiftingReport lift = has_lifting(A);
  rep["mod_radical_order"] = lift.mod_radical.algebra.n;
  rep["mod_radical_boolean_center"] =
      label_array(lift.mod_radical.algebra, lift.quotient_center.members);
  nlohmann::ordered_json lj;
  lj["lifts"] = lift.lifts;
  if (!lift.lifts) lj["unliftable"] = lift.witness;
  rep["lifting"] = std::move(lj);

  const Classification c = classify(A);
  nlohmann::ordered_json cj;
  cj["local"] = c.local;
  cj["semilocal"] = c.semilocal;
  if (c.local) {
    cj["perfect"] = c.perfect;
    cj["perfect_literal"] = c.perfect_literal;
  }
  cj["radical_dense"] = c.radical_dense;
  cj["maximal"] = c.maximal;
  cj["has_lifting"] = c.has_lifting;
  cj["filter_count"] = c.filter_count;
  cj["spec_count"] = c.spec_count;
  cj["max_count"] = c.max_count;
  rep["classification"] = std::move(cj);
  rep["notes"] = c.notes;
  return rep;
}

inline void print_report_text(const nlohmann::ordered_json& rep, std::ostream& out) {
  auto set_line = [](const nlohmann::ordered_json& f) {
    std::string s = "{";
    const auto& members = f.is_object() ? f["members"] : f;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) s += ",";
      s += members[i].get<std::string>();
    }
    s += "}";
    if (f.is_object()) s += f["proper"].get<bool>() ? " proper" : " improper";
    return s;
  };
  out << "algebra: " << rep["name"].get<std::string>() << " ("
      << rep["order"].get<int>() << " elements)\n";
  out << "filters (" << rep["filters"].size() << "):\n";
  for (const auto& f : rep["filters"]) out << "  " << set_line(f) << "\n";
  out << "Spec (" << rep["spec"].size() << "):\n";
  for (const auto& f : rep["spec"]) out << "  " << set_line(f) << "\n";
  out << "Max (" << rep["max"].size() << "):\n";
  for (const auto& f : rep["max"]) out << "  " << set_line(f) << "\n";
  out << "Rad: " << set_line(rep["radical"]) << "\n";
  out << "Ds: " << set_line(rep["dense"]) << "\n";
  out << "B(A): " << set_line(rep["boolean_center"]) << "\n";
  out << "A/Rad: " << rep["mod_radical_order"].get<int>() << " elements\n";
  out << "B(A/Rad): " << set_line(rep["mod_radical_boolean_center"]) << "\n";
  if (rep["lifting"]["lifts"].get<bool>())
    out << "lifting: yes\n";
  else
    out << "lifting: no (unliftable idempotent "
        << rep["lifting"]["unliftable"].get<std::string>() << ")\n";
  const auto& c = rep["classification"];
  out << "classification:";
  for (const auto& [key, val] : c.items()) {
    out << " " << key << "=";
    if (val.is_boolean())
      out << (val.get<bool>() ? "true" : "false");
    else
      out << val.get<std::size_t>();
  }
  out << "\n";
  for (const auto& note : rep["notes"]) out << note.get<std::string>() << "\n";
}

inline int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const AlgebraFile file = load_algebra_file(path);
  const VerifyReport rep = verify_axioms(file.algebra);
  if (rep.ok()) {
    out << file.algebra.name << ": verification: pass (" << file.algebra.n
        << " elements)\n";
    return 0;
  }
  err << file.algebra.name << ": verification: fail\n";
  for (const std::string& s : rep.structural) err << "  structural: " << s << "\n";
  for (const Violation& v : rep.violations)
    err << "  " << describe(file.algebra, v) << "\n";
  return 1;
}

// Loads a file and refuses to analyze anything that fails the axiom sweep.
inline std::optional<Algebra> load_verified(const std::string& path, std::ostream& err) {
  const AlgebraFile file = load_algebra_file(path);
  const VerifyReport rep = verify_axioms(file.algebra);
  if (!rep.ok()) {
    err << path << ": not a residuated lattice;";
    if (!rep.structural.empty())
      err << " structural: " << rep.structural.front();
    else
      err << " " << describe(file.algebra, rep.violations.front());
    err << "\n";
    return std::nullopt;
  }
  return file.algebra;
}

inline int cmd_report(const std::string& path, bool as_json, std::ostream& out,
                      std::ostream& err) {
  const auto A = load_verified(path, err);
  if (!A) return 1;
  const nlohmann::ordered_json rep = build_report(*A);
  if (as_json)
    out << rep.dump(2) << "\n";
  else
    print_report_text(rep, out);
  return 0;
}

inline int cmd_quotient(const std::string& path, const std::string& filter_arg,
                        const std::string& out_path, std::ostream& out,
                        std::ostream& err) {
  const auto A = load_verified(path, err);
  if (!A) return 1;
  FilterSet F(A->n);
  for (const std::string& label : split_labels(filter_arg)) {
    const auto it = std::find(A->labels.begin(), A->labels.end(), label);
    if (it == A->labels.end()) {
      err << "unknown element label \"" << label << "\"\n";
      return 2;
    }
    F.set(static_cast<Element>(it - A->labels.begin()));
  }
  if (!is_filter(*A, F)) {
    // Name the violated closure condition concretely.
    if (!F.test(A->one)) {
      err << "not a filter: 1 is missing\n";
    } else {
      bool explained = false;
      for (Element a : F.elements()) {
        for (Element b : F.elements())
          if (!F.test(A->prod(a, b))) {
            err << "not a filter: not closed under the product; prod("
                << A->label(a) << "," << A->label(b) << ") = "
                << A->label(A->prod(a, b)) << " is missing\n";
            explained = true;
            break;
          }
        if (explained) break;
        for (Element b = 0; b < A->n; ++b)
          if (A->leq(a, b) && !F.test(b)) {
            err << "not a filter: not upward closed; " << A->label(a) << " <= "
                << A->label(b) << " but " << A->label(b) << " is missing\n";
            explained = true;
            break;
          }
        if (explained) break;
      }
    }
    return 1;
  }
  const QuotientResult q = quotient(*A, F);
  nlohmann::ordered_json meta;
  meta["quotient_of"] = A->name;
  meta["filter"] = label_array(*A, F.elements());
  nlohmann::ordered_json classes;
  for (const auto& cls : q.classes)
    classes[q.algebra.label(q.class_of[cls[0]])] = label_array(*A, cls);
  meta["classes"] = std::move(classes);
  const std::string text = serialize_algebra(q.algebra, meta);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw io_error(out_path + ": cannot open for writing");
    f << text;
  }
  return 0;
}

inline int cmd_product(const std::vector<std::string>& paths, const std::string& out_path,
                       std::ostream& out, std::ostream& err) {
  std::vector<Algebra> factors;
  for (const std::string& p : paths) {
    const auto A = load_verified(p, err);
    if (!A) return 1;
    factors.push_back(*A);
  }
  const ProductAlgebra P = direct_product(factors, size_cap_from_env());
  nlohmann::ordered_json meta;
  meta["factors"] = nlohmann::ordered_json::array();
  for (const Algebra& F : factors) meta["factors"].push_back(F.name);
  const std::string text = serialize_algebra(P.algebra, meta);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw io_error(out_path + ": cannot open for writing");
    f << text;
  }
  return 0;
}

inline int cmd_decompose(const std::string& path, bool as_json, std::ostream& out,
                         std::ostream& err) {
  const auto A = load_verified(path, err);
  if (!A) return 1;
  DecompositionReport rep;
  try {
    rep = decompose(*A);
  } catch (const no_lifting_error& e) {
    out << "refusal: " << e.what() << "\n";
    return 1;
  }
  if (as_json) {
    nlohmann::ordered_json j;
    j["name"] = A->name;
    j["idempotents"] = label_array(*A, rep.idempotents);
    j["factors"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
      nlohmann::ordered_json f = algebra_to_json(rep.factors[i].algebra);
      f["local"] = static_cast<bool>(rep.factor_local[i]);
      f["nontrivial"] = static_cast<bool>(rep.factor_nontrivial[i]);
      j["factors"].push_back(std::move(f));
    }
    nlohmann::ordered_json iso = nlohmann::ordered_json::array();
    for (Element a = 0; a < A->n; ++a) {
      nlohmann::ordered_json pair = nlohmann::ordered_json::array();
      pair.push_back(A->label(a));
      pair.push_back(rep.product.algebra.label(rep.iso.map[a]));
      iso.push_back(std::move(pair));
    }
    j["isomorphism"] = std::move(iso);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << A->name << ": " << rep.factors.size() << " local factor"
      << (rep.factors.size() == 1 ? "" : "s") << "\n";
  out << "idempotents:";
  for (Element e : rep.idempotents) out << " " << A->label(e);
  out << "\n";
  for (std::size_t i = 0; i < rep.factors.size(); ++i) {
    const Algebra& F = rep.factors[i].algebra;
    out << "factor " << i + 1 << ": " << F.name << " (" << F.n << " elements:";
    for (const std::string& l : F.labels) out << " " << l;
    out << ")" << (rep.factor_local[i] ? " local" : "")
        << (rep.factor_nontrivial[i] ? " nontrivial" : "") << "\n";
  }
  out << "isomorphism onto " << rep.product.algebra.name << ":\n";
  for (Element a = 0; a < A->n; ++a)
    out << "  " << A->label(a) << " -> "
        << rep.product.algebra.label(rep.iso.map[a]) << "\n";
  return 0;
}

inline int cmd_enumerate(int order, const std::string& out_dir, std::ostream& out,
                         std::ostream& err) {
  (void)err;
  const Catalog cat = enumerate_algebras(order);
  out << "order " << order << ": " << cat.entries.size() << " algebra"
      << (cat.entries.size() == 1 ? "" : "s") << " up to isomorphism\n";
  out << "local: " << cat.tallies.local << ", perfect: " << cat.tallies.perfect
      << ", radical_dense: " << cat.tallies.radical_dense
      << ", has_lifting: " << cat.tallies.has_lifting << "\n";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    nlohmann::ordered_json index;
    index["order"] = order;
    index["count"] = cat.entries.size();
    index["tallies"] = {{"local", cat.tallies.local},
                        {"perfect", cat.tallies.perfect},
                        {"radical_dense", cat.tallies.radical_dense},
                        {"has_lifting", cat.tallies.has_lifting}};
    index["entries"] = nlohmann::ordered_json::array();
    for (const Algebra& A : cat.entries) {
      const std::string fname = A.name + ".json";
      const Classification c = classify(A);
      write_algebra_file((std::filesystem::path(out_dir) / fname).string(), A);
      nlohmann::ordered_json e;
      e["file"] = fname;
      e["name"] = A.name;
      e["local"] = c.local;
      e["perfect"] = c.local ? nlohmann::ordered_json(c.perfect)
                             : nlohmann::ordered_json(nullptr);
      e["radical_dense"] = c.radical_dense;
      e["has_lifting"] = c.has_lifting;
      index["entries"].push_back(std::move(e));
    }
    std::ofstream f(std::filesystem::path(out_dir) / "index.json", std::ios::binary);
    if (!f) throw io_error(out_dir + "/index.json: cannot open for writing");
    f << index.dump(2) << "\n";
    out << "catalog written to " << out_dir << "\n";
  }
  return 0;
}

inline int cmd_check_laws(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto A = load_verified(path, err);
  if (!A) return 1;
  bool all_ok = true;
  auto print = [&](const std::vector<LawResult>& results) {
    for (const LawResult& r : results) {
      if (r.failures == 0) {
        out << "  " << r.name << ": pass (" << r.cases << " cases)\n";
      } else {
        all_ok = false;
        out << "  " << r.name << ": FAIL (" << r.failures << "/" << r.cases
            << " cases, first at " << label_list(*A, r.witness) << ")\n";
      }
    }
  };
  out << "core laws:\n";
  print(core_law_suite(*A));
  out << "central-element laws:\n";
  print(boolean_law_suite(*A));
  out << (all_ok ? "all laws pass\n" : "law failures found\n");
  return all_ok ? 0 : 1;
}

}  // namespace cli

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"finite commutative integral residuated bounded lattice toolkit"};
  app.require_subcommand(1);

  std::string path, filter_arg, out_path, out_dir;
  std::vector<std::string> paths;
  bool as_json = false;
  int order = 0;

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the axiom sweep on a file");
  verify_cmd->add_option("path", path)->required();

  CLI::App* report_cmd = app.add_subcommand("report", "full structure report");
  report_cmd->add_option("path", path)->required();
  report_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* quotient_cmd = app.add_subcommand("quotient", "quotient by a filter");
  quotient_cmd->add_option("path", path)->required();
  quotient_cmd->add_option("--filter", filter_arg, "filter members, ','- or ';'-separated")
      ->required();
  quotient_cmd->add_option("--out", out_path, "write the algebra file here instead of stdout");

  CLI::App* product_cmd = app.add_subcommand("product", "direct product of algebra files");
  product_cmd->add_option("paths", paths)->required()->expected(-1);
  product_cmd->add_option("--out", out_path, "write the algebra file here instead of stdout");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "factor into local algebras");
  decompose_cmd->add_option("path", path)->required();
  decompose_cmd->add_flag("--json", as_json, "emit JSON instead of text");

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "catalog all algebras of an order");
  enumerate_cmd->add_option("--order", order, "algebra size")->required();
  enumerate_cmd->add_option("--out", out_dir, "write the catalog into this directory");

  CLI::App* laws_cmd = app.add_subcommand("check-laws", "run the identity suites on a file");
  laws_cmd->add_option("path", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream parse_out, parse_err;
    const int rc = app.exit(e, parse_out, parse_err);
    out << parse_out.str();
    err << parse_err.str();
    return rc == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return cli::cmd_verify(path, out, err);
    if (report_cmd->parsed()) return cli::cmd_report(path, as_json, out, err);
    if (quotient_cmd->parsed())
      return cli::cmd_quotient(path, filter_arg, out_path, out, err);
    if (product_cmd->parsed()) return cli::cmd_product(paths, out_path, out, err);
    if (decompose_cmd->parsed()) return cli::cmd_decompose(path, as_json, out, err);
    if (enumerate_cmd->parsed()) return cli::cmd_enumerate(order, out_dir, out, err);
    if (laws_cmd->parsed()) return cli::cmd_check_laws(path, out, err);
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace reslat

#endif  // RESLAT_CLI_APP_HPP
