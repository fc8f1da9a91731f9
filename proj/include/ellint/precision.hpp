#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ellint {

// Working-precision knobs for certified evaluation. bits is the mpfr mantissa
// width. escalation_factor is applied when a comparison cannot be decided at
// the current precision (the verifier escalates once, then re-checks the
// escalated decision at twice the escalated precision). max_terms == 0 means
// "64 * bits", which is plenty for series arguments <= 1/2; callers probing
// closer to 1 must raise it explicitly.
struct PrecisionConfig {
    long bits = 128;
    int escalation_factor = 2;
    long max_terms = 0;

    PrecisionConfig() = default;
    PrecisionConfig(long b, int esc = 2, long cap = 0)
        : bits(b), escalation_factor(esc), max_terms(cap) {
        if (bits < 53) throw std::invalid_argument("precision below 53 bits");
        if (escalation_factor < 2) throw std::invalid_argument("escalation factor below 2");
    }

    long term_cap() const { return max_terms > 0 ? max_terms : 64 * bits; }

    PrecisionConfig escalated() const {
        return PrecisionConfig(bits * escalation_factor, escalation_factor, max_terms);
    }

    // ELLINT_PREC_BITS overrides the default 128.
    static PrecisionConfig from_env() {
        const char* s = std::getenv("ELLINT_PREC_BITS");
        if (!s || !*s) return PrecisionConfig(128);
        char* end = nullptr;
        long b = std::strtol(s, &end, 10);
        if (!end || *end != '\0' || b < 53)
            throw std::invalid_argument(std::string("bad ELLINT_PREC_BITS: ") + s);
        return PrecisionConfig(b);
    }
};

// Thrown when a series would need more than the configured term cap.
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ellint
