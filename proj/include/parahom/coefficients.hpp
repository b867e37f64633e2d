#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "parahom/core.hpp"

namespace parahom {

struct HolderXT {
    double theta = 1.0;  // exponent in (0,1]
    double L = 0.0;      // constant
};

struct HolderFull {
    double vartheta = 1.0;
    double M = 0.0;
};

// Sup-norm bounds on derivatives of A; nullopt means unbounded / not declared.
struct SmoothBounds {
    std::optional<double> ds;      // ||d_s A||_inf
    std::optional<double> grad_y;  // ||grad_y A||_inf
    std::optional<double> hess_y;  // ||grad_y^2 A||_inf
    std::optional<double> grad_x;  // ||grad_x A||_inf
    std::optional<double> dt;      // ||d_t A||_inf
};

// Locally periodic coefficient field A(x,t,y,s), 1-periodic in (y,s).
// Immutable after construction; evaluation is pure and thread safe.
class CoefficientField {
  public:
    virtual ~CoefficientField() = default;

    virtual int dim() const = 0;
    virtual double mu() const = 0;
    virtual Mat2 evaluate(std::span<const double> x, double t, std::span<const double> y, double s) const = 0;

    virtual std::optional<HolderXT> holder_xt() const { return std::nullopt; }
    virtual std::optional<HolderFull> holder_full() const { return std::nullopt; }
    virtual SmoothBounds smooth_bounds() const { return {}; }

    // All built-in families are scalar multiples of the identity; solvers use
    // this fast path when available.
    virtual bool is_scalar() const { return false; }
    virtual double scalar(std::span<const double> x, double t, std::span<const double> y, double s) const;

    // Batched row evaluation for the fine-scale pde loop: out[i] = a(xs[i], t, xs[i]/eps, s).
    // Base implementation loops over scalar(); families override with factored forms.
    virtual void scalar_profile(std::span<const double> xs, double t, double inv_eps, double s,
                                std::span<double> out) const;

    // Fast-variable frequencies (integer harmonics; 0 = constant in that variable).
    virtual int s_frequency() const { return 0; }
    virtual int y_frequency() const { return 0; }

    virtual std::string describe() const = 0;
    virtual nlohmann::json spec_json() const = 0;
};

// Family construction from the JSON schema, e.g.
//   {"family":"trig_product","d":1,"a0":2.0,"c":1.0,"freq_y":1,"freq_s":1,
//    "macro":{"ax":0.25,"fx":1,"at":0.0,"ft":0}}
// Families: constant, time_only, space_only, trig_product, laminate2d.
// The optional "macro" block multiplies by m(x,t) = 1 + ax sin(2 pi fx x1) + at sin(2 pi ft t).
// Throws std::invalid_argument when parameters break ellipticity.
std::unique_ptr<CoefficientField> make_family(const nlohmann::json& spec);

struct AssumptionCheck {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // worst-case sampled margin (positive = satisfied)
};

struct AssumptionReport {
    std::vector<AssumptionCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Samples ellipticity (1.3), boundedness, periodicity (1.4) and, when declared,
// the Hölder conditions (1.5)/(1.11). Report-only.
AssumptionReport check_assumptions(const CoefficientField& f, int n_samples, uint64_t rng_seed);

}  // namespace parahom
