#include "parahom/coefficients.hpp"

#include <nlohmann/json.hpp>

#include <cmath>

namespace parahom {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double CoefficientField::scalar(std::span<const double> x, double t, std::span<const double> y, double s) const {
    return evaluate(x, t, y, s)(0, 0);
}

void CoefficientField::scalar_profile(std::span<const double> xs, double t, double inv_eps, double s,
                                      std::span<double> out) const {
    for (size_t i = 0; i < xs.size(); ++i) {
        const double xi = xs[i];
        const double yi = xs[i] * inv_eps;
        out[i] = scalar(std::span<const double>(&xi, 1), t, std::span<const double>(&yi, 1), s);
    }
}

namespace {

struct MacroSpec {
    double ax = 0.0;
    int fx = 0;
    double at = 0.0;
    int ft = 0;
    bool active() const { return ax != 0.0 || at != 0.0; }
    double eval(double x1, double t) const {
        double m = 1.0;
        if (ax != 0.0) m += ax * std::sin(kTwoPi * fx * x1);
        if (at != 0.0) m += at * std::sin(kTwoPi * ft * t);
        return m;
    }
    double min_value() const { return 1.0 - std::abs(ax) - std::abs(at); }
    double max_value() const { return 1.0 + std::abs(ax) + std::abs(at); }
    double lip_x() const { return std::abs(ax) * kTwoPi * fx; }
    double lip_t() const { return std::abs(at) * kTwoPi * ft; }
};

enum class Tag { Constant, TimeOnly, SpaceOnly, TrigProduct, Laminate2D };

// All built-in families are m(x,t) * a(y,s) * I with a a trig polynomial.
class BuiltinField final : public CoefficientField {
  public:
    BuiltinField(Tag tag, int d, double a0, double c, int fy, int fs, MacroSpec macro, nlohmann::json spec)
        : tag_(tag), d_(d), a0_(a0), c_(c), fy_(fy), fs_(fs), macro_(macro), spec_(std::move(spec)) {
        const double osc = max_osc();
        const double amin = (a0_ - osc) * macro_.min_value();
        const double amax = (a0_ + osc) * macro_.max_value();
        require(amin > 0.0, "coefficient family is degenerate: min a = " + format_double(amin) +
                                " <= 0 (need a0 > |c| * profile amplitude)");
        mu_ = std::min(amin, 1.0 / amax);
    }

    int dim() const override { return d_; }
    double mu() const override { return mu_; }
    bool is_scalar() const override { return true; }

    double fast_part(std::span<const double> y, double s) const {
        switch (tag_) {
            case Tag::Constant:
                return a0_;
            case Tag::TimeOnly:
                return a0_ + c_ * std::sin(kTwoPi * fs_ * s);
            case Tag::SpaceOnly:
                return a0_ + c_ * std::sin(kTwoPi * fy_ * y[0]);
            case Tag::TrigProduct:
                if (d_ == 1) return a0_ + c_ * std::sin(kTwoPi * fy_ * y[0]) * std::cos(kTwoPi * fs_ * s);
                return a0_ + c_ * std::sin(kTwoPi * fy_ * y[0]) * std::cos(kTwoPi * fy_ * y[1]) *
                                 std::cos(kTwoPi * fs_ * s);
            case Tag::Laminate2D:
                return a0_ + c_ * std::sin(kTwoPi * fy_ * y[0]);
        }
        return a0_;
    }

    double scalar(std::span<const double> x, double t, std::span<const double> y, double s) const override {
        return macro_.eval(x.empty() ? 0.0 : x[0], t) * fast_part(y, s);
    }

    Mat2 evaluate(std::span<const double> x, double t, std::span<const double> y, double s) const override {
        return Mat2::scalar(d_, scalar(x, t, y, s));
    }

    void scalar_profile(std::span<const double> xs, double t, double inv_eps, double s,
                        std::span<double> out) const override {
        // factored: m(x,t) * (a0 + c * g_y(x*inv_eps) * g_s(s))
        const double gs = (tag_ == Tag::TrigProduct) ? std::cos(kTwoPi * fs_ * s)
                          : (tag_ == Tag::TimeOnly)  ? std::sin(kTwoPi * fs_ * s)
                                                     : 1.0;
        for (size_t i = 0; i < xs.size(); ++i) {
            double gy;
            switch (tag_) {
                case Tag::Constant:
                    gy = 0.0;
                    break;
                case Tag::TimeOnly:
                    gy = 1.0;
                    break;
                default:
                    gy = std::sin(kTwoPi * fy_ * xs[i] * inv_eps);
            }
            const double fast = (tag_ == Tag::Constant) ? a0_
                                : (tag_ == Tag::TimeOnly)
                                    ? a0_ + c_ * gs
                                    : a0_ + c_ * gy * gs;
            out[i] = macro_.eval(xs[i], t) * fast;
        }
    }

    std::optional<HolderXT> holder_xt() const override {
        if (!macro_.active()) return HolderXT{1.0, 0.0};
        // |t - t'| <= |t - t'|^{1/2} on experiment horizons (T <= 1)
        const double amax = a0_ + max_osc();
        return HolderXT{1.0, (macro_.lip_x() + macro_.lip_t()) * amax};
    }

    std::optional<HolderFull> holder_full() const override {
        const auto sb = smooth_bounds();
        double M = 0.0;
        for (const auto& b : {sb.ds, sb.grad_y, sb.grad_x, sb.dt})
            if (b) M += *b;
        return HolderFull{1.0, M};
    }

    SmoothBounds smooth_bounds() const override {
        SmoothBounds sb;
        const double mmax = macro_.max_value();
        const double c = std::abs(c_);
        const double amax = a0_ + max_osc();
        const bool has_s = (tag_ == Tag::TimeOnly || tag_ == Tag::TrigProduct);
        const bool has_y = (tag_ != Tag::Constant && tag_ != Tag::TimeOnly);
        sb.ds = has_s ? mmax * c * kTwoPi * fs_ : 0.0;
        sb.grad_y = has_y ? mmax * c * kTwoPi * fy_ * (d_ == 2 ? 2.0 : 1.0) : 0.0;
        sb.hess_y = has_y ? mmax * c * kTwoPi * kTwoPi * fy_ * fy_ * (d_ == 2 ? 4.0 : 1.0) : 0.0;
        sb.grad_x = macro_.lip_x() * amax;
        sb.dt = macro_.lip_t() * amax;
        return sb;
    }

    int s_frequency() const override {
        return (tag_ == Tag::TimeOnly || tag_ == Tag::TrigProduct) ? fs_ : 0;
    }
    int y_frequency() const override {
        return (tag_ == Tag::Constant || tag_ == Tag::TimeOnly) ? 0 : fy_;
    }

    std::string describe() const override { return spec_.dump(); }
    nlohmann::json spec_json() const override { return spec_; }

  private:
    double max_osc() const {
        if (tag_ == Tag::Constant) return 0.0;
        return std::abs(c_);
    }

    Tag tag_;
    int d_;
    double a0_, c_;
    int fy_, fs_;
    MacroSpec macro_;
    nlohmann::json spec_;
    double mu_;
};

}  // namespace

std::unique_ptr<CoefficientField> make_family(const nlohmann::json& spec) {
    require(spec.contains("family"), "coefficient spec: missing \"family\"");
    const std::string fam = spec.at("family").get<std::string>();
    const int d = spec.value("d", 1);
    require(d == 1 || d == 2, "coefficient spec: d must be 1 or 2");
    const double a0 = spec.value("a0", 1.0);
    const double c = spec.value("c", 0.0);
    const int fy = spec.value("freq_y", 1);
    const int fs = spec.value("freq_s", 1);
    require(fy >= 1 && fs >= 1, "coefficient spec: frequencies must be >= 1");

    MacroSpec macro;
    if (spec.contains("macro") && !spec.at("macro").is_null()) {
        const auto& mj = spec.at("macro");
        macro.ax = mj.value("ax", 0.0);
        macro.fx = mj.value("fx", 1);
        macro.at = mj.value("at", 0.0);
        macro.ft = mj.value("ft", 1);
        require(macro.min_value() > 0.0, "macro modulation loses positivity: |ax|+|at| >= 1");
    }

    Tag tag;
    if (fam == "constant") {
        tag = Tag::Constant;
    } else if (fam == "time_only") {
        tag = Tag::TimeOnly;
    } else if (fam == "space_only") {
        tag = Tag::SpaceOnly;
    } else if (fam == "trig_product") {
        tag = Tag::TrigProduct;
    } else if (fam == "laminate2d") {
        tag = Tag::Laminate2D;
        require(d == 2, "laminate2d requires d = 2");
    } else {
        throw std::invalid_argument("unknown coefficient family: " + fam);
    }
    return std::make_unique<BuiltinField>(tag, d, a0, c, fy, fs, macro, spec);
}

AssumptionReport check_assumptions(const CoefficientField& f, int n_samples, uint64_t rng_seed) {
    require(n_samples >= 1, "check_assumptions: n_samples >= 1");
    Rng rng(rng_seed);
    const int d = f.dim();
    const double mu = f.mu();

    double worst_ellip = 1e300, worst_bound = 1e300, worst_period = 0.0;
    double worst_holder_xt = 0.0, worst_holder_full = 0.0;

    std::array<double, 2> x{}, y{}, xi{};
    for (int k = 0; k < n_samples; ++k) {
        for (int i = 0; i < d; ++i) {
            x[static_cast<size_t>(i)] = rng.uniform(-2.0, 2.0);
            y[static_cast<size_t>(i)] = rng.uniform(-2.0, 2.0);
            xi[static_cast<size_t>(i)] = rng.uniform(-1.0, 1.0);
        }
        const double t = rng.uniform(0.0, 1.0), s = rng.uniform(-2.0, 2.0);
        const auto sx = std::span<const double>(x.data(), static_cast<size_t>(d));
        const auto sy = std::span<const double>(y.data(), static_cast<size_t>(d));
        const Mat2 A = f.evaluate(sx, t, sy, s);

        double nxi = 0.0;
        for (int i = 0; i < d; ++i) nxi += xi[static_cast<size_t>(i)] * xi[static_cast<size_t>(i)];
        if (nxi > 1e-12) {
            const double q = A.quad_form(std::span<const double>(xi.data(), static_cast<size_t>(d)));
            worst_ellip = std::min(worst_ellip, q / nxi - mu);
        }
        worst_bound = std::min(worst_bound, 1.0 / mu - A.max_abs());

        // periodicity at integer shifts
        std::array<double, 2> ys = y;
        for (int i = 0; i < d; ++i) ys[static_cast<size_t>(i)] += 1.0;
        const Mat2 Ashift =
            f.evaluate(sx, t, std::span<const double>(ys.data(), static_cast<size_t>(d)), s + 1.0);
        worst_period = std::max(worst_period, max_abs_diff(A, Ashift));

        if (auto h = f.holder_xt()) {
            std::array<double, 2> x2 = x;
            for (int i = 0; i < d; ++i) x2[static_cast<size_t>(i)] += rng.uniform(-0.5, 0.5);
            const double t2 = t + rng.uniform(0.0, 0.5);
            const Mat2 A2 = f.evaluate(std::span<const double>(x2.data(), static_cast<size_t>(d)), t2, sy, s);
            double dist = std::sqrt(std::abs(t2 - t));
            for (int i = 0; i < d; ++i) dist += std::abs(x2[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]);
            if (dist > 1e-8) {
                const double ratio = max_abs_diff(A, A2) / std::pow(dist, h->theta);
                worst_holder_xt = std::max(worst_holder_xt, ratio - h->L);
            }
        }
        if (auto h = f.holder_full()) {
            std::array<double, 2> x2 = x, y2 = y;
            for (int i = 0; i < d; ++i) {
                x2[static_cast<size_t>(i)] += rng.uniform(-0.5, 0.5);
                y2[static_cast<size_t>(i)] += rng.uniform(-0.5, 0.5);
            }
            const double t2 = t + rng.uniform(0.0, 0.5), s2 = s + rng.uniform(-0.5, 0.5);
            const Mat2 A2 = f.evaluate(std::span<const double>(x2.data(), static_cast<size_t>(d)), t2,
                                       std::span<const double>(y2.data(), static_cast<size_t>(d)), s2);
            double dist = std::sqrt(std::abs(t2 - t)) + std::sqrt(std::abs(s2 - s));
            for (int i = 0; i < d; ++i)
                dist += std::abs(x2[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]) +
                        std::abs(y2[static_cast<size_t>(i)] - y[static_cast<size_t>(i)]);
            if (dist > 1e-8) {
                const double ratio = max_abs_diff(A, A2) / std::pow(dist, h->vartheta);
                worst_holder_full = std::max(worst_holder_full, ratio - h->M);
            }
        }
    }

    AssumptionReport rep;
    rep.checks.push_back({"ellipticity (1.3)", worst_ellip >= -1e-12, worst_ellip});
    rep.checks.push_back({"bound |A| <= 1/mu (1.3)", worst_bound >= -1e-12, worst_bound});
    rep.checks.push_back({"periodicity (1.4)", worst_period <= 1e-12, worst_period});
    if (f.holder_xt())
        rep.checks.push_back({"holder x,t (1.5)", worst_holder_xt <= 1e-9, worst_holder_xt});
    if (f.holder_full())
        rep.checks.push_back({"holder full (1.11)", worst_holder_full <= 1e-9, worst_holder_full});
    return rep;
}

}  // namespace parahom
