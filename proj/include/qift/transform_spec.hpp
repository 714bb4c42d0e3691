#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qift {

/// Transform family used to evaluate amplitude phases.
enum class TransformKind {
    ExactQft,      ///< full transform, phase x*y mod 2^n
    AqftPlain,     ///< truncated transform keeping m terms per exponent
    AqftModified,  ///< as AqftPlain but the (m+1)th term is kept with doubled weight
    Integral,      ///< alias for the modified transform at m=2; amplitudes are {1, i, -1, -i}
};

/// Which transform evaluates amplitudes, plus its retained-term count m.
/// Text grammar: "qft" | "aqft:m" | "maqft:m" | "integral".
struct TransformSpec {
    TransformKind kind = TransformKind::Integral;
    int m = 2;  // retained terms; fixed at 2 for Integral, unused for ExactQft

    static TransformSpec qft() { return {TransformKind::ExactQft, 0}; }
    static TransformSpec aqft(int m) { return checked({TransformKind::AqftPlain, m}); }
    static TransformSpec maqft(int m) { return checked({TransformKind::AqftModified, m}); }
    static TransformSpec integral() { return {TransformKind::Integral, 2}; }

    static TransformSpec parse(std::string_view text) {
        if (text == "qft") return qft();
        if (text == "integral") return integral();
        auto colon = text.find(':');
        if (colon != std::string_view::npos) {
            std::string_view head = text.substr(0, colon);
            int m = parse_m(text.substr(colon + 1));
            if (head == "aqft") return aqft(m);
            if (head == "maqft") return maqft(m);
        }
        throw std::invalid_argument("bad transform spec '" + std::string(text) +
                                    "' (expected qft | aqft:m | maqft:m | integral)");
    }

    bool uses_m() const { return kind == TransformKind::AqftPlain || kind == TransformKind::AqftModified; }

    /// m=1 keeps only the leading term of each exponent (a plain Hadamard
    /// transform); accepted but reported as degenerate.
    bool degenerate() const { return uses_m() && m == 1; }

    /// Modulus exponent of the phase index when applied at word width n.
    int order_for(int n) const { return kind == TransformKind::ExactQft ? n : effective_m(); }

    /// Retained-term count actually applied (2 for the integral kind).
    int effective_m() const { return kind == TransformKind::Integral ? 2 : m; }

    bool modified() const { return kind == TransformKind::AqftModified || kind == TransformKind::Integral; }

    void validate_for_width(int n) const {
        if (uses_m() && (m < 1 || m > n))
            throw std::invalid_argument("transform order m=" + std::to_string(m) +
                                        " out of range for width n=" + std::to_string(n));
    }

    std::string name() const {
        switch (kind) {
            case TransformKind::ExactQft: return "qft";
            case TransformKind::AqftPlain: return "aqft:" + std::to_string(m);
            case TransformKind::AqftModified: return "maqft:" + std::to_string(m);
            case TransformKind::Integral: return "integral";
        }
        return "?";
    }

    /// Second name recorded in reports: the integral kind is also maqft:2.
    std::string canonical_alias() const {
        return kind == TransformKind::Integral ? "maqft:2" : name();
    }

    friend bool operator==(const TransformSpec& a, const TransformSpec& b) {
        return a.kind == b.kind && (!a.uses_m() || a.m == b.m);
    }

private:
    static TransformSpec checked(TransformSpec s) {
        if (s.m < 1) throw std::invalid_argument("transform order m must be >= 1");
        return s;
    }
    static int parse_m(std::string_view digits) {
        if (digits.empty()) throw std::invalid_argument("missing transform order after ':'");
        int value = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') throw std::invalid_argument("transform order must be a number");
            value = value * 10 + (c - '0');
            if (value > 64) throw std::invalid_argument("transform order too large");
        }
        return value;
    }
};

}  // namespace qift
