#include "uinorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace uinorm::norms {

NormFamily NormFamily::schatten(double p) {
    if (!(p >= 1.0)) {  // rejects NaN as well
        throw std::invalid_argument("schatten norm requires p >= 1");
    }
    return NormFamily{Kind::Schatten, p, 0};
}

NormFamily NormFamily::ky_fan(std::size_t k) {
    if (k < 1) {
        throw std::invalid_argument("ky fan norm requires k >= 1");
    }
    return NormFamily{Kind::KyFan, 0.0, k};
}

NormFamily NormFamily::parse(const std::string& text) {
    if (text == "op" || text == "operator") return operator_norm();
    auto parse_tail = [&](const std::string& prefix) {
        return text.substr(prefix.size());
    };
    if (text.rfind("schatten:", 0) == 0) {
        const std::string tail = parse_tail("schatten:");
        if (tail == "inf") return schatten(std::numeric_limits<double>::infinity());
        std::size_t used = 0;
        double p = 0.0;
        try {
            p = std::stod(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad schatten exponent: " + tail);
        }
        if (used != tail.size()) {
            throw std::invalid_argument("bad schatten exponent: " + tail);
        }
        return schatten(p);
    }
    if (text.rfind("kyfan:", 0) == 0) {
        const std::string tail = parse_tail("kyfan:");
        std::size_t used = 0;
        unsigned long k = 0;
        try {
            k = std::stoul(tail, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad kyfan order: " + tail);
        }
        if (used != tail.size() || k < 1) {
            throw std::invalid_argument("bad kyfan order: " + tail);
        }
        return ky_fan(k);
    }
    throw std::invalid_argument("unknown norm family: " + text +
                                " (expected op, schatten:<p>, or kyfan:<k>)");
}

std::string NormFamily::name() const {
    switch (kind) {
        case Kind::Operator:
            return "op";
        case Kind::Schatten: {
            std::ostringstream s;
            if (std::isinf(p)) {
                s << "schatten:inf";
            } else {
                s << "schatten:" << p;
            }
            return s.str();
        }
        case Kind::KyFan:
            return "kyfan:" + std::to_string(k);
    }
    return "?";
}

double norm_from_spectrum(const spectral::SingularSpectrum& s, const NormFamily& f) {
    const std::vector<double>& v = s.values;
    switch (f.kind) {
        case NormFamily::Kind::Operator:
            return v.empty() ? 0.0 : v.front();
        case NormFamily::Kind::Schatten: {
            if (std::isinf(f.p)) return v.empty() ? 0.0 : v.front();
            double acc = 0.0;
            for (double x : v) acc += std::pow(x, f.p);
            return std::pow(acc, 1.0 / f.p);
        }
        case NormFamily::Kind::KyFan: {
            if (f.k > v.size()) {
                throw std::invalid_argument("kyfan:" + std::to_string(f.k) +
                                            " exceeds spectrum length " +
                                            std::to_string(v.size()));
            }
            double acc = 0.0;
            for (std::size_t i = 0; i < f.k; ++i) acc += v[i];
            return acc;
        }
    }
    throw std::logic_error("unreachable norm kind");
}

double norm_eval(const ComplexMatrix& a, const NormFamily& f,
                 const spectral::JacobiOptions& opts) {
    if (f.kind == NormFamily::Kind::KyFan && f.k > std::min(a.rows(), a.cols())) {
        throw std::invalid_argument("kyfan:" + std::to_string(f.k) +
                                    " out of range for matrix " + a.shape());
    }
    return norm_from_spectrum(spectral::singular_values(a, opts), f);
}

DominanceVerdict weakly_majorizes(const spectral::SingularSpectrum& lhs,
                                  const spectral::SingularSpectrum& rhs, double tol) {
    const std::size_t len = std::max(lhs.values.size(), rhs.values.size());
    DominanceVerdict verdict;
    verdict.margin = std::numeric_limits<double>::infinity();
    double lsum = 0.0, rsum = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        lsum += (i < lhs.values.size()) ? lhs.values[i] : 0.0;
        rsum += (i < rhs.values.size()) ? rhs.values[i] : 0.0;
        const double m = rsum - lsum;
        if (m < verdict.margin) {
            verdict.margin = m;
            verdict.worst_k = i + 1;
        }
    }
    verdict.holds = verdict.margin >= -tol;
    return verdict;
}

DominanceVerdict dominates_all_ui_norms(const ComplexMatrix& lhs, const ComplexMatrix& rhs,
                                        double tol, const spectral::JacobiOptions& opts) {
    return weakly_majorizes(spectral::singular_values(lhs, opts),
                            spectral::singular_values(rhs, opts), tol);
}

double majorization_tolerance(const spectral::SingularSpectrum& rhs, double tol_scale) {
    double trace_norm = 0.0;
    for (double v : rhs.values) trace_norm += v;
    return tol_scale * std::max(1.0, trace_norm);
}

}  // namespace uinorm::norms
