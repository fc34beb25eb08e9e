#include "qalg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "qalg/charrings.hpp"
#include "qalg/errors.hpp"
#include "qalg/invariants.hpp"
#include "qalg/scenarios.hpp"

namespace qalg {

namespace {

std::string dims_str(const GradedDims& d) { return d.comma_list(); }

std::string monomial_set_str(const std::vector<Monomial>& ms, const RingSpec& ring) {
    std::string out = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i)
            out += ", ";
        out += format_monomial(ms[i], ring);
    }
    return out + "}";
}

GradedDims expected_point_dims(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    for (int k = 2; k <= bound; k += 2)
        d.set(k, 2);
    return d;
}

GradedDims expected_disc_dims(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    if (bound >= 2)
        d.set(2, 2);
    if (bound >= 4)
        d.set(4, 1);
    return d;
}

GradedDims expected_main_dims(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    if (bound >= 2)
        d.set(2, 4);
    if (bound >= 4)
        d.set(4, 7);
    for (int k = 6; k <= bound; k += 2)
        d.set(k, 8);
    return d;
}

GradedDims expected_fixed_dims(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    if (bound >= 4)
        d.set(4, 3);
    for (int k = 8; k <= bound; k += 4)
        d.set(k, 4);
    return d;
}

GradedDims point_of_unit(int bound) {
    GradedDims d(bound);
    d.set(0, 1);
    return d;
}

class Runner {
public:
    explicit Runner(VerificationReport& report) : report_(report) {}

    void add(const std::string& name, const std::string& anchor, const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& body) {
        Check c;
        c.name = name;
        c.anchor = anchor;
        c.expected = expected;
        auto start = std::chrono::steady_clock::now();
        try {
            auto [ok, computed] = body();
            c.computed = computed;
            c.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
        } catch (const TruncationTooSmall& e) {
            c.computed = e.what();
            c.status = CheckStatus::Refused;
        } catch (const std::exception& e) {
            c.computed = std::string("error: ") + e.what();
            c.status = CheckStatus::Fail;
        }
        auto stop = std::chrono::steady_clock::now();
        c.wall_us =
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
        report_.checks.push_back(std::move(c));
    }

    void refuse(const std::string& name, const std::string& anchor, const std::string& expected,
                const std::string& why) {
        report_.checks.push_back(Check{name, anchor, expected, why, CheckStatus::Refused, 0});
    }

private:
    VerificationReport& report_;
};

} // namespace

int VerificationReport::passed() const {
    int n = 0;
    for (const auto& c : checks)
        n += c.status == CheckStatus::Pass;
    return n;
}

int VerificationReport::failed() const {
    int n = 0;
    for (const auto& c : checks)
        n += c.status == CheckStatus::Fail;
    return n;
}

int VerificationReport::refused() const {
    int n = 0;
    for (const auto& c : checks)
        n += c.status == CheckStatus::Refused;
    return n;
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        const char* tag = c.status == CheckStatus::Pass     ? "[PASS]"
                          : c.status == CheckStatus::Fail   ? "[FAIL]"
                                                            : "[REFUSED]";
        os << tag << " " << c.name << "\n";
        os << "    claim:    " << c.anchor << "\n";
        os << "    expected: " << c.expected << "\n";
        os << "    computed: " << c.computed << "\n";
    }
    os << "summary: " << checks.size() << " checks, " << passed() << " passed, " << failed()
       << " failed, " << refused() << " refused (max degree " << max_degree << ")\n";
    return os.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"anchor", c.anchor},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"status", c.status == CheckStatus::Pass     ? "pass"
                                  : c.status == CheckStatus::Fail   ? "fail"
                                                                    : "refused"}});
    }
    return {{"max_degree", max_degree},
            {"checks", arr},
            {"summary",
             {{"total", checks.size()},
              {"passed", passed()},
              {"failed", failed()},
              {"refused", refused()}}}};
}

VerificationReport verify_all(int max_degree) {
    VerificationReport report;
    report.max_degree = max_degree;
    Runner run(report);
    const int D = max_degree;

    /* --- catalogued ring maps ----------------------------------------- */
    for (const auto& map : builtin_maps()) {
        run.add("charrings.well-defined." + map.name(), map.anchor(), "all relations map to 0",
                [&map] {
                    WellDefinedReport wd = check_well_defined(map);
                    std::string computed = wd.ok ? "all relations map to 0"
                                                 : "residual " + wd.failures[0].second.format();
                    return std::make_pair(wd.ok, computed);
                });
    }

    {
        const RingMap& i_star = builtin_map("i_star");
        run.add("charrings.i_star.p1", "p1 -> e1^2+e2^2", "e1^2+e2^2", [&] {
            Polynomial img =
                apply_ring_map(i_star, Polynomial::parse("p1", i_star.source()->ring()));
            return std::make_pair(img.format() == "e1^2+e2^2", img.format());
        });
        run.add("charrings.i_star.e", "e -> e1*e2", "e1*e2", [&] {
            Polynomial img =
                apply_ring_map(i_star, Polynomial::parse("e", i_star.source()->ring()));
            return std::make_pair(img.format() == "e1*e2", img.format());
        });
        const RingMap& t_pt = builtin_map("t_pt_star");
        run.add("charrings.t_pt_star.p1_squared", "p1^2 -> m^4+h^4 in Q[m,h]/(m*h)", "m^4+h^4",
                [&] {
                    Polynomial img =
                        apply_ring_map(t_pt, Polynomial::parse("p1^2", t_pt.source()->ring()));
                    return std::make_pair(img.format() == "m^4+h^4", img.format());
                });
    }

    /* --- spectral sequence scenarios ----------------------------------- */
    if (D < kMinScenarioWindow) {
        for (const auto& s : builtin::scenarios())
            run.refuse("specseq." + s.name, s.description, "window of at least degree 20",
                       "refused: max degree " + std::to_string(D) +
                           " is below the safe comparison window (" +
                           std::to_string(kMinScenarioWindow) + ")");
    } else {
        {
            const auto& s = builtin::scenario("point-over-torus");
            run.add("specseq." + s.name,
                    "totals match Q[e1,e2]/(e1*e2) on row 0; collapse on page 5",
                    "row-0 concentration and the fixed-point table", [&] {
                        SpectralRun r = run_to_infinity(s.base, s.fiber, s.specs, D);
                        RingPtr er = make_ring({{"e1", 2}, {"e2", 2}});
                        Ideal ideal(er, {Polynomial::parse("e1*e2", er)});
                        RingComparison cmp =
                            compare_with_ring(r.totals, ideal, MonomialOrder::lex(er));
                        bool row0 = concentrated_in_row_zero(r.trace.back());
                        bool ok = cmp.equal && row0 && r.collapse_page == 5;
                        return std::make_pair(ok, "totals " + dims_str(r.totals) +
                                                      ", collapse page " +
                                                      std::to_string(r.collapse_page) +
                                                      (row0 ? ", row 0 only" : ", rows above 0"));
                    });
        }
        {
            const auto& s = builtin::scenario("disc-over-bso4");
            GradedDims expected = point_of_unit(D);
            run.add("specseq." + s.name, "E-infinity vanishes in positive degrees",
                    dims_str(expected), [&] {
                        SpectralRun r = run_to_infinity(s.base, s.fiber, s.specs, D);
                        return std::make_pair(dims_equal(r.totals, expected), dims_str(r.totals));
                    });
        }
        {
            const auto& s = builtin::scenario("disc-over-torus");
            GradedDims expected = expected_disc_dims(D);
            run.add("specseq." + s.name,
                    "survivors only at (0,0), (2,0), (4,0); totals match Q[m,h]/(m^2+h^2, m*h)",
                    dims_str(expected), [&] {
                        SpectralRun r = run_to_infinity(s.base, s.fiber, s.specs, D);
                        RingComparison cmp = compare_with_ring(r.totals, builtin::ideal_disc(),
                                                               MonomialOrder::lex(builtin::ring_mh()));
                        bool row0 = concentrated_in_row_zero(r.trace.back());
                        bool ok = cmp.equal && row0 && dims_equal(r.totals, expected);
                        return std::make_pair(ok, dims_str(r.totals) +
                                                      (row0 ? " (row 0 only)" : " (rows above 0)"));
                    });
        }
        {
            const auto& s = builtin::scenario("main");
            GradedDims expected = expected_main_dims(D);
            run.add("specseq." + s.name, "even grading collapses the sequence on page 2",
                    "collapse page 2, totals " + dims_str(expected), [&] {
                        SpectralRun r = run_to_infinity(s.base, s.fiber, s.specs, D);
                        bool ok = r.collapse_page == 2 && dims_equal(r.totals, expected);
                        return std::make_pair(ok, "collapse page " +
                                                      std::to_string(r.collapse_page) +
                                                      ", totals " + dims_str(r.totals));
                    });
        }
    }

    /* --- Hilbert tables ------------------------------------------------ */
    run.add("hilbert.point-ring", "Q[m,h]/(m*h) has dims 1,2,2,... in even degrees",
            dims_str(expected_point_dims(D)), [&] {
                GradedDims dims = hilbert_function(builtin::ideal_point(),
                                                   MonomialOrder::lex(builtin::ring_mh()), D);
                return std::make_pair(dims == expected_point_dims(D), dims_str(dims));
            });
    run.add("hilbert.disc-ring", "Q[m,h]/(m^2+h^2, m*h) has dims 1,0,2,0,1,0,...",
            dims_str(expected_disc_dims(D)), [&] {
                GradedDims dims = hilbert_function(builtin::ideal_disc(),
                                                   MonomialOrder::lex(builtin::ring_mh()), D);
                return std::make_pair(dims == expected_disc_dims(D), dims_str(dims));
            });
    run.add("hilbert.main-ring", "R/I2 has dims 1,4,7,8,8,... in even degrees",
            dims_str(expected_main_dims(D)), [&] {
                GradedDims dims = hilbert_function(builtin::ideal_i2(), builtin::order_mhnt(), D);
                return std::make_pair(dims == expected_main_dims(D), dims_str(dims));
            });
    run.add("hilbert.i1-equals-i2", "R/I1 and R/I2 agree degreewise", "equal on 0.." +
                std::to_string(D),
            [&] {
                GradedDims a = hilbert_function(builtin::ideal_i1(), builtin::order_mhnt(), D);
                GradedDims b = hilbert_function(builtin::ideal_i2(), builtin::order_mhnt(), D);
                auto mismatch = dims_first_mismatch(a, b);
                std::string computed =
                    mismatch ? "first mismatch at degree " + std::to_string(mismatch->degree)
                             : "equal on 0.." + std::to_string(D);
                return std::make_pair(!mismatch, computed);
            });

    /* --- Groebner leading terms ---------------------------------------- */
    run.add("groebner.lt-equality", "LT(I1) = LT(I2) = (m*h, n*t, h^3, m^2)",
            "{n*t, h^3, m*h, m^2} for both", [&] {
                GroebnerBasis g1 = buchberger(builtin::ideal_i1(), builtin::order_mhnt());
                GroebnerBasis g2 = buchberger(builtin::ideal_i2(), builtin::order_mhnt());
                std::vector<Monomial> lt1 = leading_term_ideal(g1);
                std::vector<Monomial> lt2 = leading_term_ideal(g2);
                RingPtr r = builtin::ring_mhnt();
                std::vector<Monomial> expected{
                    Monomial({0, 0, 1, 1}), Monomial({0, 3, 0, 0}), Monomial({1, 1, 0, 0}),
                    Monomial({2, 0, 0, 0})};
                bool ok = lt1 == expected && lt2 == expected;
                return std::make_pair(ok, monomial_set_str(lt1, *r) + " and " +
                                              monomial_set_str(lt2, *r));
            });

    /* --- invariants ----------------------------------------------------- */
    run.add("invariants.group-order", "the two sign flips generate C2 x C2", "4", [&] {
        GroupAction g = builtin::action_c2c2();
        return std::make_pair(g.order() == 4, std::to_string(g.order()));
    });
    run.add("invariants.degree-4-monomials",
            "invariant monomials of degree 4 are m^2, m*h, h^2, n^2, n*t, t^2",
            "{m^2, m*h, h^2, n^2, n*t, t^2}", [&] {
                std::vector<Monomial> inv = invariant_monomials(builtin::action_c2c2(), 4);
                std::vector<Monomial> expected{Monomial({2, 0, 0, 0}), Monomial({1, 1, 0, 0}),
                                               Monomial({0, 2, 0, 0}), Monomial({0, 0, 2, 0}),
                                               Monomial({0, 0, 1, 1}), Monomial({0, 0, 0, 2})};
                std::sort(expected.begin(), expected.end(), MonoLexGreater{});
                return std::make_pair(inv == expected,
                                      monomial_set_str(inv, *builtin::ring_mhnt()));
            });
    run.add("invariants.fixed-quotient-dims", "(R/I2)^G has dims 1,0,3,0,4,0,4,...",
            dims_str(expected_fixed_dims(D)), [&] {
                GradedDims dims = fixed_quotient_dims(builtin::ideal_i2(), builtin::action_c2c2(),
                                                      builtin::order_mhnt(), D);
                return std::make_pair(dims == expected_fixed_dims(D), dims_str(dims));
            });
    run.add("invariants.fixed-point-lemma.i2", "(R/I2)^G = R^G/I2^G degreewise",
            "equal on 0.." + std::to_string(D), [&] {
                FixedPointReport r = verify_fixed_point_lemma(
                    builtin::ideal_i2(), builtin::action_c2c2(), builtin::order_mhnt(), D);
                std::string computed =
                    r.equal ? "equal on 0.." + std::to_string(D)
                            : "mismatch at degree " + std::to_string(r.mismatch->degree);
                return std::make_pair(r.equal, computed);
            });
    run.add("invariants.fixed-point-lemma.i1", "(R/I1)^G = R^G/I1^G degreewise",
            "equal on 0.." + std::to_string(D), [&] {
                FixedPointReport r = verify_fixed_point_lemma(
                    builtin::ideal_i1(), builtin::action_c2c2(), builtin::order_mhnt(), D);
                std::string computed =
                    r.equal ? "equal on 0.." + std::to_string(D)
                            : "mismatch at degree " + std::to_string(r.mismatch->degree);
                return std::make_pair(r.equal, computed);
            });

    /* --- kernel element and zero divisors -------------------------------- */
    run.add("kernel.relation", "m^2+h^2-n^2-t^2 lies in ker(f)", "maps to 0", [&] {
        const RingMap& f = builtin_map("f");
        Polynomial rel = Polynomial::parse("m^2+h^2-n^2-t^2", f.source()->ring());
        bool ok = kernel_element_check(f, rel);
        return std::make_pair(ok, ok ? "maps to 0" : apply_ring_map(f, rel).format());
    });
    run.add("zero-divisors", "m^2 and h^2 are nonzero in R/I2 while m^2*h^2 = 0",
            "m^2 -> -h^2+n^2+t^2, h^2 -> h^2, m^2*h^2 -> 0", [&] {
                GroebnerBasis gb = buchberger(builtin::ideal_i2(), builtin::order_mhnt());
                RingPtr r = builtin::ring_mhnt();
                Polynomial m2 = normal_form(Polynomial::parse("m^2", r), gb);
                Polynomial h2 = normal_form(Polynomial::parse("h^2", r), gb);
                Polynomial prod = normal_form(Polynomial::parse("m^2*h^2", r), gb);
                bool ok = !m2.is_zero() && !h2.is_zero() && prod.is_zero();
                return std::make_pair(ok, "m^2 -> " + m2.format() + ", h^2 -> " + h2.format() +
                                              ", m^2*h^2 -> " + prod.format());
            });

    return report;
}

} // namespace qalg
