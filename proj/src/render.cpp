#include "qkflag/render.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "qkflag/errors.hpp"

namespace qkflag {

using nlohmann::json;

namespace {

struct RenderTerm {
  CurveDegree degree;
  int codim;
  int index;
  SchubertIndex w;
  Integer coeff;
};

std::string join_terms(std::vector<RenderTerm> terms) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(), [](const RenderTerm& a, const RenderTerm& b) {
    return std::tie(a.degree, a.codim, a.index) < std::tie(b.degree, b.codim, b.index);
  });
  std::string out;
  for (const auto& t : terms) {
    const bool neg = t.coeff < 0;
    const Integer mag = neg ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag.value()) + "*";
    const auto mono = render_monomial(t.degree);
    if (!mono.empty()) out += mono + "*";
    out += to_string(t.w);
  }
  return out;
}

json index_json(SchubertIndex w) { return json::array({w.i, w.j}); }

SchubertIndex index_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("Schubert index must be a pair [i, j]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::string degree_text(CurveDegree d) { return "(" + std::to_string(d.d1) + "," + std::to_string(d.d2) + ")"; }

std::string csv_table(const MultiplicationTable& table) {
  std::ostringstream os;
  os << "u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,coeff\n";
  const int n = table.n();
  const auto basis = enumerate_basis(RankData(n));
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      for (const auto& w : basis) {
        for (const auto& t : table.entry(u, v, w).terms()) {
          os << u.i << ',' << u.j << ',' << v.i << ',' << v.j << ',' << w.i << ',' << w.j << ',' << t.degree.d1 << ','
             << t.degree.d2 << ',' << t.coeff << '\n';
        }
      }
    }
  }
  return os.str();
}

json counterexample_json(const Counterexample& c) {
  return {{"kind", c.kind},
          {"u", index_json(c.u)},
          {"v", index_json(c.v)},
          {"w", index_json(c.w)},
          {"degree", {c.degree.d1, c.degree.d2}},
          {"coefficient", c.coefficient.value()},
          {"expected", c.expected.value()}};
}

}  // namespace

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ParseError("unknown output format: " + s);
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  return "text";
}

std::string render_monomial(CurveDegree d) {
  std::string out;
  auto power = [&](const char* name, int e) {
    if (e == 0) return;
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  };
  power("Q1", d.d1);
  power("Q2", d.d2);
  return out;
}

std::string render_poly(const NovikovPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    const bool neg = t.coeff < 0;
    const Integer mag = neg ? -t.coeff : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const auto mono = render_monomial(t.degree);
    if (mono.empty()) {
      out += std::to_string(mag.value());
    } else {
      if (mag != 1) out += std::to_string(mag.value()) + "*";
      out += mono;
    }
  }
  return out;
}

std::string render_class(const QKClass& c, int n) {
  std::vector<RenderTerm> terms;
  for (const auto& [w, p] : c.terms()) {
    for (const auto& t : p.terms()) terms.push_back({t.degree, codim(w, n), linear_index(w, n), w, t.coeff});
  }
  return join_terms(std::move(terms));
}

std::string render_class(const KClass& c, int n) { return render_class(to_quantum(c), n); }

std::string render_product(SchubertIndex u, SchubertIndex v, const QKClass& c, int n) {
  return to_string(u) + " * " + to_string(v) + " = " + render_class(c, n);
}

std::string render_product(SchubertIndex u, SchubertIndex v, const KClass& c, int n) {
  return render_product(u, v, to_quantum(c), n);
}

json poly_to_json(const NovikovPolynomial& p) {
  json out = json::array();
  for (const auto& t : p.terms()) out.push_back({{"d1", t.degree.d1}, {"d2", t.degree.d2}, {"coeff", t.coeff.value()}});
  return out;
}

NovikovPolynomial poly_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of terms");
  NovikovPolynomial p;
  for (const auto& t : j) {
    const CurveDegree d{t.at("d1").get<int>(), t.at("d2").get<int>()};
    if (d.d1 < 0 || d.d2 < 0) throw ParseError("negative Novikov exponent");
    p.add_term(d, t.at("coeff").get<std::int64_t>());
  }
  return p;
}

json class_to_json(const QKClass& c, int n) {
  json terms = json::array();
  for (const auto& [w, p] : c.terms()) terms.push_back({{"w", index_json(w)}, {"poly", poly_to_json(p)}});
  return {{"n", n}, {"terms", terms}};
}

QKClass class_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    QKClass out;
    for (const auto& t : j.at("terms")) {
      const auto w = index_from_json(t.at("w"));
      require_valid(w, n);
      out.add(w, poly_from_json(t.at("poly")));
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed class JSON: ") + e.what());
  }
}

json table_to_json(const MultiplicationTable& table) {
  const int n = table.n();
  const auto basis = enumerate_basis(RankData(n));
  json entries = json::array();
  for (const auto& u : basis) {
    for (const auto& v : basis) {
      for (const auto& w : basis) {
        const auto& p = table.entry(u, v, w);
        if (p.is_zero()) continue;
        entries.push_back({{"u", index_json(u)}, {"v", index_json(v)}, {"w", index_json(w)}, {"poly", poly_to_json(p)}});
      }
    }
  }
  return {{"n", n}, {"entries", entries}};
}

MultiplicationTable table_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const RankData rank(n);
    std::vector<PolyMatrix> matrices(rank.size(), PolyMatrix(rank.size()));
    for (const auto& e : j.at("entries")) {
      const auto u = index_from_json(e.at("u"));
      const auto v = index_from_json(e.at("v"));
      const auto w = index_from_json(e.at("w"));
      for (const auto& x : {u, v, w}) require_valid(x, n);
      matrices[linear_index(u, n)].at(linear_index(w, n), linear_index(v, n)) += poly_from_json(e.at("poly"));
    }
    return MultiplicationTable(n, std::move(matrices));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed table JSON: ") + e.what());
  }
}

MultiplicationTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open table file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("cannot parse " + path + ": " + e.what());
  }
  return table_from_json(j);
}

std::string render_table(const MultiplicationTable& table, OutputFormat format) {
  if (format == OutputFormat::json) return table_to_json(table).dump(1) + "\n";
  if (format == OutputFormat::csv) return csv_table(table);
  const int n = table.n();
  const auto basis = enumerate_basis(RankData(n));
  std::string out;
  for (const auto& u : basis) {
    for (const auto& v : basis) out += render_product(u, v, table.product(u, v), n) + "\n";
  }
  return out;
}

std::string render_report(const VerificationReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    json cx = json::array();
    for (const auto& c : r.counterexamples) cx.push_back(counterexample_json(c));
    json j = {{"check", r.check}, {"n", r.n},        {"pass", r.pass},
              {"examined", r.examined}, {"counterexamples", cx}, {"notes", r.notes}};
    return j.dump(1) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "check,n,kind,u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,coefficient,expected\n";
    for (const auto& c : r.counterexamples) {
      os << r.check << ',' << r.n << ',' << c.kind << ',' << c.u.i << ',' << c.u.j << ',' << c.v.i << ',' << c.v.j << ','
         << c.w.i << ',' << c.w.j << ',' << c.degree.d1 << ',' << c.degree.d2 << ',' << c.coefficient << ','
         << c.expected << '\n';
    }
    return os.str();
  }
  std::ostringstream os;
  os << r.check << " n=" << r.n << ": " << (r.pass ? "PASS" : "FAIL") << " (examined " << r.examined << ", "
     << r.counterexamples.size() << " counterexamples)\n";
  for (const auto& c : r.counterexamples) {
    os << "  " << c.kind << ": " << to_string(c.u) << " " << to_string(c.v) << " -> " << to_string(c.w) << " degree "
       << degree_text(c.degree) << " got " << c.coefficient << " expected " << c.expected << "\n";
  }
  for (const auto& note : r.notes) os << "  note: " << note << "\n";
  return os.str();
}

std::string render_report(const DiffReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    json mm = json::array();
    for (const auto& m : r.mismatches) {
      mm.push_back({{"u", index_json(m.u)},
                    {"v", index_json(m.v)},
                    {"w", index_json(m.w)},
                    {"degree", {m.degree.d1, m.degree.d2}},
                    {"table", m.table.value()},
                    {"conjecture", m.conjecture.value()}});
    }
    json an = json::array();
    for (const auto& a : r.anomalies) {
      an.push_back({{"u", index_json(a.u)},
                    {"v", index_json(a.v)},
                    {"target", a.target},
                    {"w", index_json(a.w)},
                    {"degree", {a.degree.d1, a.degree.d2}}});
    }
    json j = {{"n", r.n},
              {"source", r.source},
              {"pairs_compared", r.pairs_compared},
              {"pairs_mismatched", r.pairs_mismatched},
              {"empty", r.empty()},
              {"mismatches", mm},
              {"anomalies", an}};
    return j.dump(1) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::ostringstream os;
    os << "u_i,u_j,v_i,v_j,w_i,w_j,d1,d2,table,conjecture\n";
    for (const auto& m : r.mismatches) {
      os << m.u.i << ',' << m.u.j << ',' << m.v.i << ',' << m.v.j << ',' << m.w.i << ',' << m.w.j << ',' << m.degree.d1
         << ',' << m.degree.d2 << ',' << m.table << ',' << m.conjecture << '\n';
    }
    return os.str();
  }
  std::ostringstream os;
  os << "diff n=" << r.n << " source=" << r.source << ": " << r.pairs_mismatched << " of " << r.pairs_compared
     << " pairs differ, " << r.mismatches.size() << " coefficient mismatches, " << r.anomalies.size()
     << " degree anomalies\n";
  for (const auto& m : r.mismatches) {
    os << "  " << to_string(m.u) << " * " << to_string(m.v) << " at " << to_string(m.w) << " degree "
       << degree_text(m.degree) << ": table " << m.table << ", conjecture " << m.conjecture << "\n";
  }
  for (const auto& a : r.anomalies) {
    os << "  anomaly: " << to_string(a.u) << " * " << to_string(a.v) << " target t" << a.target << " = "
       << to_string(a.w) << " has degree " << degree_text(a.degree) << "\n";
  }
  return os.str();
}

std::string render_report(const ArbitrationReport& r, OutputFormat format) {
  if (format == OutputFormat::json) {
    json cs = json::array();
    for (const auto& c : r.candidates) {
      cs.push_back({{"name", c.name},
                    {"classical_mismatches", c.classical_mismatches},
                    {"commutativity_mismatches", c.commutativity_mismatches},
                    {"same_as_default", c.same_as_default},
                    {"adopted", c.adopted}});
    }
    return json{{"n", r.n}, {"candidates", cs}, {"default_confirmed", r.default_confirmed}}.dump(1) + "\n";
  }
  std::ostringstream os;
  os << "chevalley arbitration n=" << r.n << ": default " << (r.default_confirmed ? "confirmed" : "NOT confirmed")
     << "\n";
  for (const auto& c : r.candidates) {
    os << "  " << c.name << ": classical mismatches " << c.classical_mismatches << ", commutativity mismatches "
       << c.commutativity_mismatches << (c.adopted ? " (adopted)" : c.same_as_default ? " (same table as default)" : "")
       << "\n";
  }
  return os.str();
}

std::string render_sequences(const AdmissibleSequenceSet& A, OutputFormat format) {
  if (format == OutputFormat::json) {
    return json{{"d", A.d}, {"sequences", A.a}, {"spread", spread(A)}}.dump() + "\n";
  }
  std::string out = "{";
  for (std::size_t k = 0; k < A.a.size(); ++k) {
    if (k) out += ",";
    out += "(";
    for (std::size_t j = 0; j < A.a[k].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(A.a[k][j]);
    }
    out += ")";
  }
  return out + "}\n";
}

}  // namespace qkflag
