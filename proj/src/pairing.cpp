#include "chow/pairing.hpp"

#include "json.hpp"

#include "chow/degree.hpp"
#include "chow/error.hpp"
#include "chow/oracle.hpp"
#include "chow/standard_monomials.hpp"

namespace chow {

std::vector<FlatId> essential_flats(const RingContext& ctx, const Monomial& m) {
  if (!ctx.is_standard(m)) {
    throw Error(ErrorKind::NotStandard, to_string(m) + " is not a standard monomial");
  }
  const auto& mat = ctx.matroid();
  const int r = mat.rank();
  std::vector<FlatId> chain(static_cast<std::size_t>(r) + 1, mat.bottom());
  std::vector<char> removed(static_cast<std::size_t>(r) + 1, 0);
  removed[static_cast<std::size_t>(r)] = 1;
  FlatId cur = mat.bottom();
  auto climb = [&](FlatId target) {
    while (cur != target) {
      FlatId next = target;
      for (FlatId c : mat.covers(cur)) {
        if (mat.leq(c, target) && c < next) next = c;
      }
      cur = next;
      chain[static_cast<std::size_t>(mat.rank(cur))] = cur;
    }
  };
  for (const auto& f : m.factors()) {
    climb(f.gen);
    const int rk = mat.rank(f.gen);
    for (int i = rk - static_cast<int>(f.exp); i < rk; ++i) removed[static_cast<std::size_t>(i)] = 1;
  }
  climb(mat.top());
  std::vector<FlatId> out;
  for (int i = 0; i <= r; ++i) {
    if (!removed[static_cast<std::size_t>(i)]) out.push_back(chain[static_cast<std::size_t>(i)]);
  }
  return out;
}

Polynomial dual_element(Straightener& ring, const Monomial& m) {
  const auto& ctx = ring.context();
  Polynomial d = Polynomial::constant(1);
  for (FlatId g : essential_flats(ctx, m)) {
    if (ctx.mode() == RingMode::reduced && g == ctx.matroid().bottom()) continue;
    d = ring.straighten(d * x_element(ctx, g));
  }
  return d;
}

namespace {

IntMatrix full_pairing_with(DegreeMap& deg, const std::vector<Monomial>& rows,
                            const std::vector<Monomial>& cols) {
  IntMatrix q(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) q(i, j) = deg.monomial(rows[i] * cols[j]);
  }
  return q;
}

PairingReport pairing_with(Straightener& ring, DegreeMap& deg, int k, bool with_full) {
  const auto& ctx = ring.context();
  const int top = deg.top_degree();
  if (k < 0 || k > top) {
    throw Error(ErrorKind::DegreeOutOfRange,
                "degree " + std::to_string(k) + " outside 0.." + std::to_string(top));
  }
  PairingReport rep;
  rep.degree = k;
  rep.rows = standard_monomials(ctx, k);
  const std::size_t n = rep.rows.size();
  rep.matrix = IntMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    rep.col_duals.push_back(essential_flats(ctx, rep.rows[j]));
    const Polynomial d = dual_element(ring, rep.rows[j]);
    for (std::size_t i = 0; i < n; ++i) {
      Integer v = 0;
      for (const auto& [s, c] : d.terms()) {
        if (deg.monomial(rep.rows[i] * s)) v += c;
      }
      rep.matrix(i, j) = v;
    }
  }
  rep.lower_triangular_unit = true;
  rep.delta_order_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& v = rep.matrix(i, j);
      const std::string at = "(" + to_string(rep.rows[i]) + ", " + to_string(rep.rows[j]) + ")";
      if (i == j) {
        if (v != 1) {
          rep.lower_triangular_unit = false;
          rep.violations.push_back("diagonal " + at + " = " + v.get_str());
        }
      } else if (v != 0) {
        if (j > i) {
          rep.lower_triangular_unit = false;
          rep.violations.push_back("above diagonal " + at + " = " + v.get_str());
        }
        if (!(delta(ctx, rep.rows[j]) < delta(ctx, rep.rows[i]))) {
          rep.delta_order_ok = false;
          rep.violations.push_back("delta order " + at + " = " + v.get_str());
        }
      }
    }
  }
  if (with_full) {
    auto q = full_pairing_with(deg, rep.rows, standard_monomials(ctx, top - k));
    if (q.rows() == q.cols()) {
      rep.full_pairing_det = determinant(std::move(q));
    } else {
      rep.violations.push_back("complementary degrees have ranks " + std::to_string(q.rows()) +
                               " and " + std::to_string(q.cols()));
    }
  }
  return rep;
}

}  // namespace

PairingReport pairing_matrix(const RingContext& ctx, int k, bool with_full_pairing) {
  Straightener ring(ctx);
  DegreeMap deg(ctx);
  return pairing_with(ring, deg, k, with_full_pairing);
}

IntMatrix full_pairing(const RingContext& ctx, int k) {
  DegreeMap deg(ctx);
  if (k < 0 || k > deg.top_degree()) {
    throw Error(ErrorKind::DegreeOutOfRange, "degree " + std::to_string(k));
  }
  return full_pairing_with(deg, standard_monomials(ctx, k),
                           standard_monomials(ctx, deg.top_degree() - k));
}

std::string to_json(const PairingReport& report) {
  nlohmann::ordered_json j;
  j["degree"] = report.degree;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& m : report.rows) j["rows"].push_back(to_string(m));
  j["matrix"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.matrix.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < report.matrix.cols(); ++c) {
      row.push_back(to_int64(report.matrix(i, c)));
    }
    j["matrix"].push_back(std::move(row));
  }
  j["lower_triangular_unit"] = report.lower_triangular_unit;
  if (report.full_pairing_det) {
    j["full_pairing_det"] = to_int64(*report.full_pairing_det);
  } else {
    j["full_pairing_det"] = nullptr;
  }
  return j.dump();
}

bool TheoremReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return true;
}

TheoremReport verify_theorems(const RingContext& ctx) {
  TheoremReport out;
  const int top = *ctx.top_degree();

  TheoremCheck basis{"standard monomial basis", true, ""};
  RelationOracle oracle(ctx);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= top + 1; ++d) {
    const auto sm = standard_monomials(ctx, d);
    dims.push_back(sm.size());
    const auto& info = oracle.degree(d);
    if (!info.torsion_free) {
      basis.ok = false;
      basis.detail = "degree " + std::to_string(d) + " has torsion";
      break;
    }
    auto cert = certify_basis(oracle, sm, d);
    if (!cert.ok) {
      basis.ok = false;
      basis.detail = cert.detail;
      break;
    }
  }
  if (basis.ok) {
    basis.detail = "ranks";
    for (int d = 0; d <= top; ++d) basis.detail += " " + std::to_string(dims[static_cast<std::size_t>(d)]);
  }
  out.checks.push_back(basis);

  auto wd = verify_degree_welldefined(ctx);
  out.checks.push_back({"degree well-defined", wd.ok(),
                        std::to_string(wd.checked) + (wd.sampled ? " sampled" : "") +
                            " products" + (wd.ok() ? "" : ": " + wd.violations.front())});

  Straightener ring(ctx);
  DegreeMap deg(ctx);
  TheoremCheck tri{"triangular pairing", true, ""};
  TheoremCheck pd{"unimodular duality", true, ""};
  for (int k = 0; k <= top; ++k) {
    auto rep = pairing_with(ring, deg, k, true);
    if (tri.ok && !(rep.lower_triangular_unit && rep.delta_order_ok)) {
      tri.ok = false;
      tri.detail = "degree " + std::to_string(k) + ": " +
                   (rep.violations.empty() ? "" : rep.violations.front());
    }
    const bool unit = rep.full_pairing_det && (*rep.full_pairing_det == 1 || *rep.full_pairing_det == -1);
    if (pd.ok && !unit) {
      pd.ok = false;
      pd.detail = "degree " + std::to_string(k) + ": determinant " +
                  (rep.full_pairing_det ? rep.full_pairing_det->get_str() : "undefined");
    }
  }
  out.checks.push_back(tri);
  out.checks.push_back(pd);

  TheoremCheck pal{"palindromic Hilbert series", true, ""};
  for (int d = 0; d <= top; ++d) {
    if (dims[static_cast<std::size_t>(d)] != dims[static_cast<std::size_t>(top - d)]) {
      pal.ok = false;
      pal.detail = "degrees " + std::to_string(d) + " and " + std::to_string(top - d) + " differ";
      break;
    }
  }
  out.checks.push_back(pal);
  return out;
}

}  // namespace chow
