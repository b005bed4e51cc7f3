#include "boxhelly.h"

#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "constructions.hpp"
#include "errors.hpp"
#include "geometry.hpp"
#include "io_json.hpp"
#include "reports.hpp"

using namespace boxhelly;

struct bh_family {
    BoxFamily value;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs fn, translating the exception hierarchy into status codes and
// stashing the message for bh_last_error.
template <typename Fn>
bh_status guarded(Fn&& fn) {
    try {
        fn();
        return BH_OK;
    } catch (const DimensionMismatch& e) {
        g_last_error = e.what();
        return BH_ERR_DIMENSION;
    } catch (const EmptyFamily& e) {
        g_last_error = e.what();
        return BH_ERR_EMPTY;
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return BH_ERR_PARSE;
    } catch (const LimitExceeded& e) {
        g_last_error = e.what();
        return BH_ERR_LIMIT;
    } catch (const HypothesisError& e) {
        g_last_error = e.what();
        return BH_ERR_HYPOTHESIS;
    } catch (const OverflowError& e) {
        g_last_error = e.what();
        return BH_ERR_OVERFLOW;
    } catch (const InvalidArgument& e) {
        g_last_error = e.what();
        return BH_ERR_INVALID;
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return BH_ERR_NOMEM;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return BH_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return BH_ERR_INTERNAL;
    }
}

bh_status invalid(const char* message) {
    g_last_error = message;
    return BH_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* bh_status_name(bh_status status) {
    switch (status) {
        case BH_OK: return "ok";
        case BH_ERR_INVALID: return "invalid argument";
        case BH_ERR_PARSE: return "parse error";
        case BH_ERR_LIMIT: return "limit exceeded";
        case BH_ERR_DIMENSION: return "dimension mismatch";
        case BH_ERR_EMPTY: return "empty family";
        case BH_ERR_HYPOTHESIS: return "hypothesis violated";
        case BH_ERR_OVERFLOW: return "arithmetic overflow";
        case BH_ERR_NOMEM: return "out of memory";
        case BH_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* bh_last_error(void) { return g_last_error.c_str(); }

const char* bh_version(void) { return "1.0.0"; }

void bh_string_free(char* text) { delete[] text; }

void bh_family_free(bh_family* family) { delete family; }

bh_status bh_family_parse_json(const char* text, bh_family** out) {
    if (text == nullptr || out == nullptr) return invalid("NULL argument");
    return guarded([&] { *out = new bh_family{family_from_text(text)}; });
}

bh_status bh_family_to_json(const bh_family* family, char** out_json) {
    if (family == nullptr || out_json == nullptr) return invalid("NULL argument");
    return guarded([&] { *out_json = copy_string(family_to_text(family->value)); });
}

long long bh_family_dim(const bh_family* family) {
    return family == nullptr ? -1 : family->value.dim();
}

long long bh_family_size(const bh_family* family) {
    return family == nullptr ? -1 : static_cast<long long>(family->value.size());
}

bh_status bh_gen_turan(long long n, long long d, bh_family** out) {
    if (out == nullptr) return invalid("NULL argument");
    return guarded([&] { *out = new bh_family{gen_turan_family(n, d)}; });
}

bh_status bh_gen_staircase(long long n, long long k, bh_family** out) {
    if (out == nullptr) return invalid("NULL argument");
    return guarded([&] { *out = new bh_family{gen_staircase_family(n, k)}; });
}

bh_status bh_gen_random(long long n, long long d, unsigned long long seed, const char* extent,
                        const char* side_min, const char* side_max, int closed, bh_family** out) {
    if (out == nullptr) return invalid("NULL argument");
    return guarded([&] {
        RandomFamilyParams params;
        if (extent != nullptr) params.extent = Rational::parse(extent);
        if (side_min != nullptr) params.side_min = Rational::parse(side_min);
        if (side_max != nullptr) params.side_max = Rational::parse(side_max);
        params.closed = closed != 0;
        *out = new bh_family{gen_random_family(n, d, seed, params)};
    });
}

bh_status bh_analyze_json(const bh_family* family, int with_edges, char** out_json) {
    if (family == nullptr || out_json == nullptr) return invalid("NULL argument");
    return guarded([&] {
        *out_json = copy_string(analyze_report(family->value, with_edges != 0).dump(2) + "\n");
    });
}

bh_status bh_extract_json(const bh_family* family, char** out_json) {
    if (family == nullptr || out_json == nullptr) return invalid("NULL argument");
    return guarded([&] { *out_json = copy_string(extract_report(family->value).dump(2) + "\n"); });
}

bh_status bh_verify_json(const bh_family* family, long long k, const char* eps, char** out_json,
                         int* any_fail) {
    if (family == nullptr || out_json == nullptr || any_fail == nullptr) {
        return invalid("NULL argument");
    }
    return guarded([&] {
        std::optional<std::int64_t> k_opt;
        if (k >= 0) k_opt = k;
        std::optional<Rational> eps_opt;
        if (eps != nullptr) eps_opt = Rational::parse(eps);
        bool fail = false;
        auto report = verify_report(family->value, k_opt, eps_opt, fail);
        *out_json = copy_string(report.dump(2) + "\n");
        *any_fail = fail ? 1 : 0;
    });
}

bh_status bh_search_json(long long n, long long k, long long d, char** out_json) {
    if (out_json == nullptr) return invalid("NULL argument");
    return guarded([&] { *out_json = copy_string(search_report(n, k, d).dump(2) + "\n"); });
}

}  // extern "C"
