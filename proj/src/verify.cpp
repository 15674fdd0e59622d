#include "mz/verify.hpp"

#include <sstream>

#include "mz/chars.hpp"
#include "mz/errors.hpp"
#include "mz/reptheory.hpp"
#include "mz/topo.hpp"
#include "mz/zeta.hpp"

namespace mz {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
    case CheckStatus::Discrepancy:
      return "documented-discrepancy";
  }
  return "?";
}

EnumCaps caps_for(bool deep) {
  EnumCaps caps;
  if (deep) {
    caps.max_group_order = 1L << 20;
    caps.max_pairs = 50'000'000;
  }
  return caps;
}

namespace {

using Failure = std::optional<std::string>;

class Suite {
 public:
  Suite(std::vector<CheckResult>& out, std::string group) : out_(out), group_(std::move(group)) {}

  template <class Fn>
  void run(const std::string& name, const std::string& formula, Fn fn) {
    CheckResult r{name, formula, group_, CheckStatus::Pass, {}};
    try {
      const Failure f = fn();
      if (f) {
        r.status = CheckStatus::Fail;
        r.detail = *f;
      }
    } catch (const CapExceeded& e) {
      r.status = CheckStatus::Skipped;
      r.detail = e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
    out_.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& formula, const std::string& why) {
    out_.push_back({name, formula, group_, CheckStatus::Skipped, why});
  }

  void discrepancy(const std::string& name, const std::string& formula, const std::string& detail) {
    out_.push_back({name, formula, group_, CheckStatus::Discrepancy, detail});
  }

 private:
  std::vector<CheckResult>& out_;
  std::string group_;
};

std::string join_labels(const Group& g, const std::vector<int>& cls) {
  std::string s;
  for (int c : cls) s += (s.empty() ? "" : " ") + g.class_info(c).label;
  return s;
}

// Nondecreasing r-tuples of class indices; a deterministic stride subset when there are more than limit.
std::vector<std::vector<int>> insertion_lists(int nc, int r, std::size_t limit) {
  std::vector<std::vector<int>> all;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  while (true) {
    all.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == nc - 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(i)];
  }
  if (all.size() <= limit) return all;
  std::vector<std::vector<int>> picked;
  const std::size_t stride = (all.size() + limit - 1) / limit;
  for (std::size_t i = 0; i < all.size(); i += stride) picked.push_back(all[i]);
  return picked;
}

void table_checks(Suite& s, const CharacterTable& t) {
  const Group& g = t.group();
  const Rational order(g.order());
  s.run("class equation", "sum of class sizes = |G|", [&]() -> Failure {
    long total = 0;
    for (const auto& c : g.classes()) total += c.size;
    if (total != g.order()) return "sum " + std::to_string(total);
    return std::nullopt;
  });
  s.run("degree sum", "sum_pi dim(pi)^2 = |G|", [&]() -> Failure {
    long total = 0;
    for (int i = 0; i < t.num_irreps(); ++i) total += t.dim(i) * t.dim(i);
    if (total != g.order()) return "sum " + std::to_string(total);
    return std::nullopt;
  });
  s.run("row orthogonality", "(1/|G|) sum_c |c| chi_i(c) conj chi_j(c) = delta_ij", [&]() -> Failure {
    for (int i = 0; i < t.num_irreps(); ++i) {
      for (int j = 0; j < t.num_irreps(); ++j) {
        CycNumber acc(t.conductor(), Rational(0));
        for (int c = 0; c < g.num_classes(); ++c) {
          acc += t.value(i, c) * t.value(j, c).conj() * Rational(g.class_info(c).size);
        }
        if (acc * order.inverse() != CycNumber(t.conductor(), Rational(i == j ? 1 : 0))) {
          return irrep_label(t.irrep(i)) + " vs " + irrep_label(t.irrep(j));
        }
      }
    }
    return std::nullopt;
  });
  s.run("column orthogonality", "sum_pi chi(c) conj chi(d) = delta_cd |C(c)|", [&]() -> Failure {
    for (int c = 0; c < g.num_classes(); ++c) {
      for (int d = 0; d < g.num_classes(); ++d) {
        CycNumber acc(t.conductor(), Rational(0));
        for (int i = 0; i < t.num_irreps(); ++i) acc += t.value(i, c) * t.value(i, d).conj();
        const Rational want = c == d ? Rational(g.class_info(c).centralizer_order) : Rational(0);
        if (acc != CycNumber(t.conductor(), want)) return g.class_info(c).label + " vs " + g.class_info(d).label;
      }
    }
    return std::nullopt;
  });
  s.run("Frobenius-Schur rule", "case rule = (1/|G|) sum_c |c| chi(c^2); no -1; PGL all +1", [&]() -> Failure {
    for (int i = 0; i < t.num_irreps(); ++i) {
      const Rational sum = t.fs_by_sum(i);
      if (sum != Rational(t.fs(i))) return irrep_label(t.irrep(i)) + " sum " + sum.to_string();
      if (t.fs(i) == -1) return irrep_label(t.irrep(i)) + " is quaternionic";
      if (g.is_pgl() && t.fs(i) != 1) return irrep_label(t.irrep(i)) + " is not real";
    }
    return std::nullopt;
  });
}

void zeta_checks(Suite& s, const CharacterTable& t, bool deep) {
  const Group& g = t.group();
  const int q = g.q();
  const GroupKind kind = g.kind();
  s.run("zeta closed form", "zeta_G(s) closed form = sum_pi dim^-s, s in [-4, 6]", [&]() -> Failure {
    for (long x = -4; x <= 6; ++x) {
      if (zeta(t, x) != zeta_closed(kind, q, x)) return "s = " + std::to_string(x);
    }
    const Complex z(0.5, 1.25);
    if (std::abs(zeta(t, z) - zeta_closed(kind, q, z)) > 1e-9) return "s = 0.5+1.25i";
    return std::nullopt;
  });
  s.run("zeta at 0", "zeta_G(0) = number of classes", [&]() -> Failure {
    if (zeta(t, 0L) != Rational(g.num_classes())) return zeta(t, 0L).to_string();
    return std::nullopt;
  });
  const Rational at_minus_two = zeta(t, -2L);
  s.run("zeta at -2", "zeta_G(-2) = |G|", [&]() -> Failure {
    if (at_minus_two != Rational(g.order())) return at_minus_two.to_string();
    return std::nullopt;
  });
  const Rational sq = Rational(g.order()) * Rational(g.order());
  if (at_minus_two != sq) {
    s.discrepancy("zeta at -2 as |G|^2", "zeta_G(-2) = |G|^2 as stated",
                  "zeta_G(-2) = " + at_minus_two.to_string() + " but |G|^2 = " + sq.to_string() +
                      "; the Burnside identity gives |G|");
  }
  s.run("FS zeta closed form", "zeta_{G,eps}(s) closed forms for eps = +1, 0, -1", [&]() -> Failure {
    for (int ind : {-1, 0, 1}) {
      for (long x = -4; x <= 6; ++x) {
        if (zeta_fs(t, ind, x) != zeta_fs_closed(kind, q, ind, x)) {
          return "eps = " + std::to_string(ind) + ", s = " + std::to_string(x);
        }
      }
    }
    return std::nullopt;
  });
  const int nc = g.num_classes();
  const std::size_t limit = deep ? SIZE_MAX : 400;
  for (int r = 1; r <= 3; ++r) {
    s.run("insertion closed forms r=" + std::to_string(r),
          "zeta^(r)(gamma_1..gamma_r; s) closed forms = sum_pi prod chi(gamma_j) / dim^(s+r), s in [-2, 3]",
          [&]() -> Failure {
            long checked = 0;
            for (const auto& cls : insertion_lists(nc, r, limit)) {
              if (!has_insert_closed_form(g, cls)) continue;
              for (long x = -2; x <= 3; ++x) {
                ++checked;
                if (zeta_insert(t, cls, x) != zeta_insert_closed(g, cls, x)) {
                  return join_labels(g, cls) + " at s = " + std::to_string(x);
                }
              }
            }
            if (checked == 0) return std::string("no insertion list has a closed form");
            return std::nullopt;
          });
  }
  if (!g.is_pgl()) {
    s.run("insertion vanishing", "zeta^(r) = 0 when det(gamma_1 ... gamma_r) != 1", [&]() -> Failure {
      for (const auto& cls : insertion_lists(nc, 2, limit)) {
        FieldElement d = g.F().one();
        for (int c : cls) d = g.F().mul(d, g.det(g.class_info(c).rep));
        if (d == g.F().one()) continue;
        for (long x = -2; x <= 3; ++x) {
          if (!zeta_insert(t, cls, x).is_zero()) return join_labels(g, cls);
        }
      }
      return std::nullopt;
    });
    s.run("quantum double zeta", "zeta_D(G)(s) closed form = sum over (O, rho) of (|O| dim rho)^-s", [&]() -> Failure {
      for (long x = -4; x <= 6; ++x) {
        if (zeta_double(t, x) != zeta_double_closed(q, x)) return "s = " + std::to_string(x);
      }
      if (q == 2 && zeta_double(t, 0L) != Rational(8)) return "q = 2, s = 0 gives " + zeta_double(t, 0L).to_string();
      return std::nullopt;
    });
  }
}

void fusion_checks(Suite& s, const CharacterTable& t, bool deep) {
  const Group& g = t.group();
  const long n = t.num_irreps();
  if (!deep && n * n * n > 20000) {
    s.skip("fusion closed forms", "triple brackets = closed formulas", "more than 20000 triples; use --deep");
    return;
  }
  if (!g.is_pgl()) {
    s.run("fusion closed forms", "<pi pi' pi''> class sum = closed formula, all triples", [&]() -> Failure {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          for (int k = 0; k < n; ++k) {
            const Rational want =
                closed_form_bracket(t.chars(), t.irrep(i), t.irrep(j), t.irrep(k));
            if (t.triple_bracket(i, j, k) != want) {
              return irrep_label(t.irrep(i)) + " " + irrep_label(t.irrep(j)) + " " + irrep_label(t.irrep(k));
            }
          }
        }
      }
      return std::nullopt;
    });
  }
  s.run("fusion integrality", "N_ij^k non-negative integers with dim_i dim_j = sum_k N_ij^k dim_k", [&]() -> Failure {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long total = 0;
        for (int k = 0; k < n; ++k) total += t.fusion_coeff(i, j, k) * t.dim(k);
        if (total != t.dim(i) * t.dim(j)) return irrep_label(t.irrep(i)) + " x " + irrep_label(t.irrep(j));
      }
    }
    return std::nullopt;
  });
}

void oracle_checks(Suite& s, const CharacterTable& t, const VerifyOptions& opts) {
  const auto& gptr = t.group_ptr();
  const Group& g = *gptr;
  std::unique_ptr<Oracle> oracle;
  try {
    oracle = std::make_unique<Oracle>(gptr, OracleConfig{caps_for(opts.deep), opts.jobs});
  } catch (const CapExceeded& e) {
    s.skip("oracle", "element enumeration", e.what());
    return;
  }
  Oracle& o = *oracle;
  if (opts.prepare_oracle) opts.prepare_oracle(o);
  const bool small = g.order() <= 200 || opts.deep;

  s.run("theta_T spectral", "theta_T = |G| sum_pi chi_pi / dim pi (enumerated commutators)", [&]() -> Failure {
    if (!(o.theta_torus() == ClassFunction::theta_torus_spectral(t))) return std::string("pointwise mismatch");
    return std::nullopt;
  });
  s.run("theta_square spectral", "theta_sq = sum_pi nu_2(pi) chi_pi (enumerated squares)", [&]() -> Failure {
    if (!(o.theta_square() == ClassFunction::theta_square_spectral(t))) return std::string("pointwise mismatch");
    return std::nullopt;
  });
  s.run("involution count", "sum_pi nu_2(pi) dim pi = 1 + t", [&]() -> Failure {
    Rational sum(0);
    for (int i = 0; i < t.num_irreps(); ++i) sum += Rational(t.fs(i) * t.dim(i));
    const Rational count = *o.theta_square().at_identity().as_rational();
    if (sum != count) return sum.to_string() + " vs " + count.to_string();
    if (!g.is_pgl()) {
      const long q = g.q();
      const long inv = q % 2 == 0 ? q * q - 1 : q * q + q + 1;
      if (count != Rational(1 + inv)) return "t = " + (count - Rational(1)).to_string();
    }
    return std::nullopt;
  });
  if (small) {
    s.run("FS element sums", "(1/|G|) sum_g chi(g^2) over elements = nu_2", [&]() -> Failure {
      for (int i = 0; i < t.num_irreps(); ++i) {
        if (o.fs(t, i) != Rational(t.fs(i))) return irrep_label(t.irrep(i));
      }
      return std::nullopt;
    });
    if (t.num_irreps() <= 12 || opts.deep) {
      s.run("fusion element sums", "(1/|G|) sum_g chi chi' chi''(g) over elements = class sum", [&]() -> Failure {
        for (int i = 0; i < t.num_irreps(); ++i) {
          for (int j = 0; j < t.num_irreps(); ++j) {
            for (int k = 0; k < t.num_irreps(); ++k) {
              if (o.triple(t, i, j, k) != t.triple_bracket(i, j, k)) return irrep_label(t.irrep(i));
            }
          }
        }
        return std::nullopt;
      });
    }
  }

  const int nc = g.num_classes();
  auto compare_counts = [&](const SurfaceSpec& spec, bool quotient) -> Failure {
    const Rational f = quotient ? quotient_count(t, spec).value : hom_count(t, spec).value;
    const Rational b = quotient ? o.quotient_count_burnside(spec) : o.hom_count(spec);
    if (f != b) {
      std::ostringstream os;
      os << (spec.orientable ? "orientable" : "non-orientable") << " g=" << spec.genus << " ["
         << join_labels(g, spec.boundaries) << "]: formula " << f << ", oracle " << b;
      return os.str();
    }
    return std::nullopt;
  };
  s.run("Mednykh closed orientable", "|Hom(pi_1 S_g, G)| = |G|^(2g-1) sum_pi dim^(2-2g), g = 0..3", [&]() -> Failure {
    for (long gen = 0; gen <= 3; ++gen) {
      if (auto f = compare_counts({true, gen, {}}, false)) return f;
    }
    return std::nullopt;
  });
  s.run("Mednykh with boundary", "|X(gamma_1..gamma_r)| = |G|^(2g-1) prod|O_j| sum_pi prod chi(gamma_j) / dim^(2g-2+r)",
        [&]() -> Failure {
          for (long gen = 0; gen <= 1; ++gen) {
            for (int r = 1; r <= 2; ++r) {
              for (const auto& cls : insertion_lists(nc, r, opts.deep ? SIZE_MAX : 300)) {
                if (auto f = compare_counts({true, gen, cls}, false)) return f;
              }
            }
          }
          return std::nullopt;
        });
  s.run("Mednykh non-orientable", "|Hom| = |G|^(g-1) sum_{nu_2 != 0} (nu_2 dim)^(2-g), g = 1..3", [&]() -> Failure {
    for (long gen = 1; gen <= 3; ++gen) {
      if (auto f = compare_counts({false, gen, {}}, false)) return f;
    }
    if (small) {
      const SurfaceSpec klein{false, 2, {}};
      if (o.direct_hom_count(klein) != hom_count(t, klein).value) return std::string("Klein bottle direct count");
    }
    return std::nullopt;
  });
  s.run("non-orientable with boundary", "|X| = |G|^(g-1) prod|O_j| sum_{nu_2 != 0} nu_2^g dim^(2-g-r) prod chi(gamma_j)",
        [&]() -> Failure {
          for (long gen = 1; gen <= 2; ++gen) {
            for (int c = 0; c < nc; ++c) {
              if (auto f = compare_counts({false, gen, {c}}, false)) return f;
            }
          }
          return std::nullopt;
        });
  if (g.is_pgl()) return;

  s.run("quotient closed orientable", "|Hom/AdG| = |G|^(2g-2) zeta_D(G)(2g-2), g = 1..2", [&]() -> Failure {
    for (long gen = 1; gen <= 2; ++gen) {
      const SurfaceSpec spec{true, gen, {}};
      if (auto f = compare_counts(spec, true)) return f;
      if (small && gen == 1) {
        try {
          if (o.quotient_count_orbits(spec) != quotient_count(t, spec).value) return std::string("explicit orbit count");
        } catch (const CapExceeded&) {
          // The explicit partition is only a cross-check; Burnside above already ran.
        }
      }
    }
    return std::nullopt;
  });
  s.run("quotient with boundary", "sum_k |C(k)|^(2g+r-1) sum_rho prod Ind(rho)(gamma_j) / dim^(2g-2+r), g = 1, r = 1",
        [&]() -> Failure {
          for (int c = 0; c < nc; ++c) {
            if (auto f = compare_counts({true, 1, {c}}, true)) return f;
          }
          return std::nullopt;
        });
  s.run("quotient non-orientable", "sum_k |C(k)|^(g+r-1) sum_{nu_2(rho) != 0} ..., g = 1..2, r = 0..1",
        [&]() -> Failure {
          for (long gen = 1; gen <= 2; ++gen) {
            if (auto f = compare_counts({false, gen, {}}, true)) return f;
            for (int c = 0; c < nc; ++c) {
              if (auto f = compare_counts({false, gen, {c}}, true)) return f;
            }
          }
          return std::nullopt;
        });
  if (small) {
    s.run("induced characters", "Tr Ind_H^G(rho)(gamma) via H meet O(gamma) = sum over x in G", [&]() -> Failure {
      for (int k = 0; k < nc; ++k) {
        if (g.class_info(k).cls.type == ClassType::Central) continue;
        const AbelianCentralizer h(gptr, k);
        for (long rho = 0; rho < h.order(); ++rho) {
          for (int c = 0; c < nc; ++c) {
            if (induced_char_value(h, rho, c) != o.induced_char_value(h, rho, c)) {
              return g.class_info(k).label + " rho " + std::to_string(rho) + " at " + g.class_info(c).label;
            }
          }
        }
      }
      return std::nullopt;
    });
  }
}

}  // namespace

std::vector<CheckResult> verify_suite(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  bool identities_done = false;
  for (GroupKind kind : {GroupKind::GL2, GroupKind::PGL2}) {
    const auto g = Group::build(kind, opts.q);
    const auto t = CharacterTable::build(g);
    Suite s(out, g->name());
    table_checks(s, *t);
    zeta_checks(s, *t, opts.deep);
    fusion_checks(s, *t, opts.deep);
    oracle_checks(s, *t, opts);
    if (!identities_done) {
      identities_done = true;
      Suite field(out, "F_" + std::to_string(opts.q));
      for (const auto& c : check_character_sum_identities(t->chars())) {
        field.run("character sum identity", c.name, [&]() -> Failure {
          if (!c.ok()) return std::to_string(c.failures) + " of " + std::to_string(c.cases) + " points fail";
          return std::nullopt;
        });
      }
    }
  }
  return out;
}

}  // namespace mz
