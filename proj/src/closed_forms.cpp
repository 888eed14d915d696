#include "esdom/closed_forms.hpp"

#include <cassert>
#include <stdexcept>

namespace esdom {

namespace {

[[noreturn]] void out_of_range(const FamilySpec& spec, const char* what) {
    throw std::invalid_argument(std::string(what) + " is not defined for " + to_string(spec));
}

}  // namespace

long long gamma_esp_formula(const FamilySpec& spec) {
    const long long n = spec.a;
    switch (spec.family) {
        case Family::Path: {
            if (n < 2) out_of_range(spec, "gamma_esp formula");
            long long k = n / 4;
            switch (n % 4) {
                case 0: return 2 * k;
                case 1: return 2 * k + 1;
                default: return 2 * k + 2;  // residues 2 and 3
            }
        }
        case Family::Cycle: {
            if (n < 3) out_of_range(spec, "gamma_esp formula");
            long long r = n % 4;
            if (r == 0 || r == 3) return (n + 1) / 2;
            return (n + 2) / 2;
        }
        case Family::Complete: {
            if (n < 1) out_of_range(spec, "gamma_esp formula");
            return n <= 2 ? n : n - 1;  // one- and two-vertex graphs need everything
        }
        case Family::CompleteBipartite: {
            if (spec.a < 2 || spec.b < 2) out_of_range(spec, "gamma_esp formula");
            return spec.a + spec.b - 2;
        }
        case Family::Star: {
            if (n < 2) out_of_range(spec, "gamma_esp formula");
            return n == 2 ? 2 : n - 1;  // all leaves; star:2 is the two-vertex graph
        }
        default:
            out_of_range(spec, "gamma_esp formula");
    }
}

bool n_esp_formula_defined(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return spec.a >= 2;
        case Family::Cycle: return spec.a >= 3;
        case Family::Complete: return spec.a >= 3;
        case Family::CompleteBipartite: return spec.a >= 2 && spec.b >= 2;
        case Family::Star: return spec.a >= 2;
        default: return false;
    }
}

long long n_esp_formula(const FamilySpec& spec) {
    if (!n_esp_formula_defined(spec)) out_of_range(spec, "N_esp formula");
    const long long n = spec.a;
    switch (spec.family) {
        case Family::Path: {
            long long k = n / 4;
            switch (n % 4) {
                case 0: return 1;
                case 1: return 2 * k + 1;
                case 2: {
                    long long num = 5 * k * k + 5 * k + 2;
                    assert(num % 2 == 0);
                    return num / 2;
                }
                default: return k + 1;
            }
        }
        case Family::Cycle: {
            switch (n % 4) {
                case 0: return 4;
                case 1: return 2 * n;
                case 2: {
                    long long num = 5 * n * (n - 2);
                    assert(num % 8 == 0);
                    return num / 8;
                }
                default: return n;
            }
        }
        case Family::Complete:
            return n;
        case Family::CompleteBipartite:
            return spec.a * spec.b;
        case Family::Star:
            return 1;  // the leaf set is the unique minimum
        default:
            out_of_range(spec, "N_esp formula");
    }
}

bool construction_defined(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Path: return spec.a >= 2;
        case Family::Cycle: return spec.a >= 3;
        case Family::Complete: return spec.a >= 1;
        case Family::CompleteBipartite: return spec.a >= 2 && spec.b >= 2;
        case Family::Star: return spec.a >= 2;
        default: return false;
    }
}

VertexSet construct_optimal_set(const FamilySpec& spec) {
    if (!construction_defined(spec)) out_of_range(spec, "optimal construction");
    long long order = spec.a + (spec.family == Family::CompleteBipartite ? spec.b : 0);
    if (order > kMaxVertices) out_of_range(spec, "optimal construction (max 128 vertices)");
    const long long n = spec.a;
    VertexSet s;
    switch (spec.family) {
        case Family::Path: {
            // Blocks of four contribute their first and last vertex; the leftover
            // tail per residue keeps both ends of the path covered.
            long long k = n / 4;
            for (long long i = 0; i < k; ++i) {
                s.add(static_cast<int>(4 * i));
                s.add(static_cast<int>(4 * i + 3));
            }
            switch (n % 4) {
                case 1: s.add(static_cast<int>(4 * k)); break;
                case 2: s.add(static_cast<int>(4 * k)); s.add(static_cast<int>(4 * k + 1)); break;
                case 3: s.add(static_cast<int>(4 * k)); s.add(static_cast<int>(4 * k + 2)); break;
                default: break;
            }
            return s;
        }
        case Family::Cycle: {
            long long k = n / 4;
            switch (n % 4) {
                case 0:
                    for (long long i = 0; i < k; ++i) {
                        s.add(static_cast<int>(4 * i));
                        s.add(static_cast<int>(4 * i + 3));
                    }
                    return s;
                case 1:
                    s.add(1); s.add(3); s.add(static_cast<int>(4 * k));
                    for (long long i = 1; i < k; ++i) {
                        s.add(static_cast<int>(4 * i));
                        s.add(static_cast<int>(4 * i + 3));
                    }
                    return s;
                case 2:
                    for (long long i = 0; i < k; ++i) {
                        s.add(static_cast<int>(4 * i));
                        s.add(static_cast<int>(4 * i + 3));
                    }
                    s.add(static_cast<int>(4 * k));
                    s.add(static_cast<int>(4 * k + 1));
                    return s;
                default:
                    for (long long i = 0; i <= k; ++i) {
                        s.add(static_cast<int>(4 * i + 1));
                        s.add(static_cast<int>(4 * i + 2));
                    }
                    return s;
            }
        }
        case Family::Complete:
            // everything but the last vertex (n <= 2: everything)
            for (long long v = 0; v + (n > 2 ? 1 : 0) < n; ++v) s.add(static_cast<int>(v));
            return s;
        case Family::CompleteBipartite:
            // drop the last vertex of each side
            for (long long v = 0; v < spec.a + spec.b; ++v)
                if (v != spec.a - 1 && v != spec.a + spec.b - 1) s.add(static_cast<int>(v));
            return s;
        case Family::Star:
            if (n == 2) { s.add(0); s.add(1); return s; }
            for (long long v = 1; v < n; ++v) s.add(static_cast<int>(v));
            return s;
        default:
            out_of_range(spec, "optimal construction");
    }
}

}  // namespace esdom
