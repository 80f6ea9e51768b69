#include "hopftwist/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

namespace hopftwist::io {

namespace {

[[noreturn]] void fieldError(const std::string& where, const std::string& what) {
  throw Error(where + ": " + what);
}

mpq_class rationalFromJson(const json& j, const std::string& where) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) fieldError(where, "expected a rational string \"p/q\" or an integer");
  const std::string s = j.get<std::string>();
  if (s.empty()) fieldError(where, "empty rational");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = (c >= '0' && c <= '9') || (c == '-' && i == 0) || c == '/';
    if (!ok) fieldError(where, "malformed rational '" + s + "'");
  }
  auto slash = s.find('/');
  if (slash != std::string::npos &&
      (slash == 0 || slash + 1 == s.size() || s.find('/', slash + 1) != std::string::npos))
    fieldError(where, "malformed rational '" + s + "'");
  mpq_class q;
  try {
    q = mpq_class(s);
  } catch (const std::invalid_argument&) {
    fieldError(where, "malformed rational '" + s + "'");
  }
  if (slash != std::string::npos && q.get_den() == 0)
    fieldError(where, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rationalToString(const mpq_class& q) { return q.get_str(); }

Cyc liftIfAsked(Cyc v, long conductorOverride, const std::string& where) {
  if (conductorOverride == 0) return v;
  if (conductorOverride % v.conductor() != 0)
    fieldError(where, "cannot lift a conductor-" + std::to_string(v.conductor()) +
                          " value to conductor " + std::to_string(conductorOverride));
  return v.liftedTo(conductorOverride);
}

const json& expect(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fieldError(where, std::string("missing field '") + key + "'");
  return j.at(key);
}

long expectPositive(const json& j, const char* key, const std::string& where) {
  const json& v = expect(j, key, where);
  if (!v.is_number_integer() || v.get<long>() < 1)
    fieldError(where + "." + key, "expected a positive integer");
  return v.get<long>();
}

}  // namespace

json scalarToJson(const Cyc& v) {
  json c = json::array();
  for (const mpq_class& q : v.coeffs()) c.push_back(rationalToString(q));
  return json{{"n", v.conductor()}, {"c", std::move(c)}};
}

Cyc scalarFromJson(const json& j, const std::string& where) {
  long n = expectPositive(j, "n", where);
  const json& c = expect(j, "c", where);
  if (!c.is_array()) fieldError(where + ".c", "expected an array");
  if (static_cast<long>(c.size()) != eulerPhi(n))
    fieldError(where + ".c", "expected phi(" + std::to_string(n) + ") = " +
                                 std::to_string(eulerPhi(n)) + " coefficients, got " +
                                 std::to_string(c.size()));
  std::vector<mpq_class> coeffs;
  coeffs.reserve(c.size());
  for (size_t i = 0; i < c.size(); ++i)
    coeffs.push_back(rationalFromJson(c[i], where + ".c[" + std::to_string(i) + "]"));
  return Cyc(n, std::move(coeffs));
}

json groupToJson(const Group& g) {
  json table = json::array();
  for (const auto& row : g.table()) table.push_back(row);
  return json{{"order", g.order()}, {"table", std::move(table)}};
}

Group groupFromJson(const json& j) {
  long n = expectPositive(j, "order", "group");
  const json& t = expect(j, "table", "group");
  if (!t.is_array() || static_cast<long>(t.size()) != n)
    fieldError("group.table", "expected " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> table;
  for (size_t i = 0; i < t.size(); ++i) {
    const json& row = t[i];
    if (!row.is_array() || static_cast<long>(row.size()) != n)
      fieldError("group.table[" + std::to_string(i) + "]", "expected " + std::to_string(n) +
                                                               " entries");
    std::vector<int> r;
    for (const json& v : row) {
      if (!v.is_number_integer())
        fieldError("group.table[" + std::to_string(i) + "]", "entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return Group::fromCayley(std::move(table));
}

namespace {

long hopfConductor(const HopfAlgebra& h) {
  long n = 1;
  auto bump = [&n](const Cyc& v) { n = std::lcm(n, v.conductor()); };
  for (const Mat& m : h.mult)
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) bump(m(r, c));
  for (Index i = 0; i < h.unit.size(); ++i) bump(h.unit[i]);
  for (Index c = 0; c < h.comult.cols(); ++c)
    for (Index r = 0; r < h.comult.rows(); ++r) bump(h.comult(r, c));
  for (Index i = 0; i < h.counit.cols(); ++i) bump(h.counit(0, i));
  for (Index c = 0; c < h.antipode.cols(); ++c)
    for (Index r = 0; r < h.antipode.rows(); ++r) bump(h.antipode(r, c));
  return n;
}

json scalarArray(const Vec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(scalarToJson(v[i]));
  return a;
}

Vec scalarArrayFrom(const json& j, Index expected, const std::string& where,
                    long conductorOverride) {
  if (!j.is_array() || static_cast<Index>(j.size()) != expected)
    fieldError(where, "expected " + std::to_string(expected) + " scalars");
  Vec v(expected);
  for (Index i = 0; i < expected; ++i)
    v[i] = liftIfAsked(scalarFromJson(j[static_cast<size_t>(i)],
                                      where + "[" + std::to_string(i) + "]"),
                       conductorOverride, where);
  return v;
}

}  // namespace

json hopfToJson(const HopfAlgebra& h) {
  const Index d = h.dim;
  json mult = json::array();
  for (Index i = 0; i < d; ++i) {
    json rows = json::array();
    for (Index j2 = 0; j2 < d; ++j2) {
      json ks = json::array();
      for (Index k = 0; k < d; ++k) ks.push_back(scalarToJson(h.mult[static_cast<size_t>(i)](k, j2)));
      rows.push_back(std::move(ks));
    }
    mult.push_back(std::move(rows));
  }
  json comult = json::array();
  for (Index i = 0; i < d; ++i) comult.push_back(scalarArray(h.comult.col(i)));
  json antipode = json::array();
  for (Index r = 0; r < d; ++r) antipode.push_back(scalarArray(h.antipode.row(r).transpose()));
  return json{{"dim", d},
              {"n", hopfConductor(h)},
              {"mult", std::move(mult)},
              {"unit", scalarArray(h.unit)},
              {"comult", std::move(comult)},
              {"counit", scalarArray(h.counit.row(0).transpose())},
              {"antipode", std::move(antipode)}};
}

HopfAlgebra hopfFromJson(const json& j, long conductorOverride) {
  const Index d = expectPositive(j, "dim", "hopf");
  expectPositive(j, "n", "hopf");  // declared conductor; informative
  HopfAlgebra h;
  h.dim = d;
  const json& mult = expect(j, "mult", "hopf");
  if (!mult.is_array() || static_cast<Index>(mult.size()) != d)
    fieldError("hopf.mult", "expected " + std::to_string(d) + " blocks");
  h.mult.assign(static_cast<size_t>(d), Mat::Zero(d, d));
  for (Index i = 0; i < d; ++i) {
    const json& rows = mult[static_cast<size_t>(i)];
    if (!rows.is_array() || static_cast<Index>(rows.size()) != d)
      fieldError("hopf.mult[" + std::to_string(i) + "]", "expected " + std::to_string(d) + " rows");
    for (Index j2 = 0; j2 < d; ++j2) {
      Vec ks = scalarArrayFrom(rows[static_cast<size_t>(j2)], d,
                               "hopf.mult[" + std::to_string(i) + "][" + std::to_string(j2) + "]",
                               conductorOverride);
      for (Index k = 0; k < d; ++k) h.mult[static_cast<size_t>(i)](k, j2) = ks[k];
    }
  }
  h.unit = scalarArrayFrom(expect(j, "unit", "hopf"), d, "hopf.unit", conductorOverride);
  const json& comult = expect(j, "comult", "hopf");
  if (!comult.is_array() || static_cast<Index>(comult.size()) != d)
    fieldError("hopf.comult", "expected " + std::to_string(d) + " columns");
  h.comult = Mat::Zero(d * d, d);
  for (Index i = 0; i < d; ++i)
    h.comult.col(i) = scalarArrayFrom(comult[static_cast<size_t>(i)], d * d,
                                      "hopf.comult[" + std::to_string(i) + "]", conductorOverride);
  Vec counit = scalarArrayFrom(expect(j, "counit", "hopf"), d, "hopf.counit", conductorOverride);
  h.counit = counit.transpose();
  const json& antipode = expect(j, "antipode", "hopf");
  if (!antipode.is_array() || static_cast<Index>(antipode.size()) != d)
    fieldError("hopf.antipode", "expected " + std::to_string(d) + " rows");
  h.antipode = Mat::Zero(d, d);
  for (Index r = 0; r < d; ++r)
    h.antipode.row(r) = scalarArrayFrom(antipode[static_cast<size_t>(r)], d,
                                        "hopf.antipode[" + std::to_string(r) + "]",
                                        conductorOverride)
                            .transpose();
  return h;
}

json elementToJson(const Element& e, const std::string& host) {
  json coeffs = json::array();
  for (Index i = 0; i < e.coeffs.size(); ++i)
    if (!e.coeffs[i].isZero()) coeffs.push_back(json::array({i, scalarToJson(e.coeffs[i])}));
  json out{{"dim", e.dim}, {"rank", e.rank}, {"coeffs", std::move(coeffs)}};
  if (!host.empty()) out["host"] = host;
  return out;
}

Element elementFromJson(const json& j, long conductorOverride) {
  const Index d = expectPositive(j, "dim", "element");
  long rank = expectPositive(j, "rank", "element");
  if (rank < 1 || rank > 3) fieldError("element.rank", "rank must be 1, 2 or 3");
  Element e = Element::zero(d, static_cast<int>(rank));
  const json& coeffs = expect(j, "coeffs", "element");
  if (!coeffs.is_array()) fieldError("element.coeffs", "expected an array of [index, scalar]");
  for (size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "element.coeffs[" + std::to_string(i) + "]";
    const json& entry = coeffs[i];
    if (!entry.is_array() || entry.size() != 2) fieldError(where, "expected [index, scalar]");
    if (!entry[0].is_number_integer()) fieldError(where, "index must be an integer");
    Index idx = entry[0].get<Index>();
    if (idx < 0 || idx >= e.size())
      fieldError(where, "index " + std::to_string(idx) + " out of range for dim " +
                            std::to_string(d) + " rank " + std::to_string(rank));
    e.coeffs[idx] += liftIfAsked(scalarFromJson(entry[1], where), conductorOverride, where);
  }
  return e;
}

json moduleToJson(const Module& m) {
  json action = json::array();
  for (const SpMat& a : m.action) {
    Mat dense = toDense(a);
    json rows = json::array();
    for (Index r = 0; r < dense.rows(); ++r)
      rows.push_back(scalarArray(dense.row(r).transpose()));
    action.push_back(std::move(rows));
  }
  return json{{"host_dim", m.hostDim}, {"dim", m.dim}, {"action", std::move(action)}};
}

std::pair<Index, std::vector<Mat>> moduleFromJson(const json& j, long conductorOverride) {
  const Index hostDim = expectPositive(j, "host_dim", "module");
  const Index m = expectPositive(j, "dim", "module");
  const json& action = expect(j, "action", "module");
  if (!action.is_array() || static_cast<Index>(action.size()) != hostDim)
    fieldError("module.action", "expected " + std::to_string(hostDim) + " matrices");
  std::vector<Mat> mats;
  for (Index i = 0; i < hostDim; ++i) {
    const json& rows = action[static_cast<size_t>(i)];
    const std::string where = "module.action[" + std::to_string(i) + "]";
    if (!rows.is_array() || static_cast<Index>(rows.size()) != m)
      fieldError(where, "expected " + std::to_string(m) + " rows");
    Mat a(m, m);
    for (Index r = 0; r < m; ++r)
      a.row(r) = scalarArrayFrom(rows[static_cast<size_t>(r)], m,
                                 where + "[" + std::to_string(r) + "]", conductorOverride)
                     .transpose();
    mats.push_back(std::move(a));
  }
  return {hostDim, std::move(mats)};
}

json charTableToJson(const std::vector<Vec>& rows, const std::string& groupRef) {
  json rs = json::array();
  for (const Vec& row : rows) rs.push_back(scalarArray(row));
  return json{{"group", groupRef}, {"rows", std::move(rs)}};
}

std::pair<std::string, std::vector<Vec>> charTableFromJson(const json& j,
                                                           long conductorOverride) {
  const json& groupRef = expect(j, "group", "chartable");
  if (!groupRef.is_string()) fieldError("chartable.group", "expected a string reference");
  const json& rows = expect(j, "rows", "chartable");
  if (!rows.is_array() || rows.empty()) fieldError("chartable.rows", "expected a nonempty array");
  const Index n = static_cast<Index>(rows[0].size());
  std::vector<Vec> out;
  for (size_t r = 0; r < rows.size(); ++r)
    out.push_back(scalarArrayFrom(rows[r], n, "chartable.rows[" + std::to_string(r) + "]",
                                  conductorOverride));
  return {groupRef.get<std::string>(), std::move(out)};
}

BicharSpec bicharFromJson(const json& j, long conductorOverride) {
  BicharSpec spec;
  const json& sub = expect(j, "subgroup", "bichar");
  if (!sub.is_array() || sub.empty()) fieldError("bichar.subgroup", "expected a nonempty array");
  for (const json& v : sub) {
    if (!v.is_number_integer()) fieldError("bichar.subgroup", "indices must be integers");
    spec.subgroup.push_back(v.get<int>());
  }
  const json& beta = expect(j, "beta", "bichar");
  const Index m = static_cast<Index>(spec.subgroup.size());
  if (!beta.is_array() || static_cast<Index>(beta.size()) != m)
    fieldError("bichar.beta", "expected " + std::to_string(m) + " rows (one per character)");
  spec.beta = Mat(m, m);
  for (Index r = 0; r < m; ++r)
    spec.beta.row(r) = scalarArrayFrom(beta[static_cast<size_t>(r)], m,
                                       "bichar.beta[" + std::to_string(r) + "]",
                                       conductorOverride)
                           .transpose();
  return spec;
}

json reportToJson(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks()) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (c.skipped) entry["skipped"] = true;
    if (!c.pass) entry["witness"] = c.witness;
    checks.push_back(std::move(entry));
  }
  return json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

json loadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void saveFile(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << dump(j);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hopftwist::io
