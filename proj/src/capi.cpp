#include "grskit/grskit.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "grskit/jobs.hpp"

using namespace grskit;

extern "C" {

struct grskit_field {
    FieldPtr rep;
};

struct grskit_code {
    LinearCode rep;
};

} // extern "C"

namespace {

thread_local std::string g_last_error;

grskit_status to_status(ErrorCode code) {
    return static_cast<grskit_status>(static_cast<int>(code));
}

template <typename Fn>
grskit_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GRSKIT_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GRSKIT_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

extern "C" {

const char* grskit_version(void) { return "0.1.0"; }

const char* grskit_status_name(grskit_status status) {
    return error_code_name(static_cast<ErrorCode>(static_cast<int>(status)));
}

const char* grskit_last_error(void) { return g_last_error.c_str(); }

void grskit_string_free(char* s) { std::free(s); }

grskit_status grskit_field_create(uint64_t p, uint32_t m, const uint32_t* modulus,
                                  size_t modulus_len, grskit_field** out) {
    return guarded([&] {
        std::optional<std::vector<std::uint32_t>> mod;
        if (modulus) mod.emplace(modulus, modulus + modulus_len);
        *out = new grskit_field{Field::make(p, m, std::move(mod))};
    });
}

grskit_status grskit_field_from_json(const char* spec_json, grskit_field** out) {
    return guarded([&] {
        json j = json::parse(spec_json, nullptr, false);
        if (j.is_discarded()) raise(ErrorCode::spec_validation, "field spec is not valid JSON");
        *out = new grskit_field{field_from_json(j)};
    });
}

void grskit_field_destroy(grskit_field* f) { delete f; }

uint64_t grskit_field_order(const grskit_field* f) { return f->rep->order(); }
uint64_t grskit_field_characteristic(const grskit_field* f) { return f->rep->characteristic(); }
uint32_t grskit_field_degree(const grskit_field* f) { return f->rep->degree(); }
uint32_t grskit_field_generator(const grskit_field* f) { return f->rep->generator(); }

grskit_status grskit_field_to_json(const grskit_field* f, char** out_json) {
    return guarded([&] { *out_json = dup_string(field_to_json(*f->rep).dump()); });
}

#define GRSKIT_CHECKED_ELT(f, x)                                                        \
    do {                                                                                \
        if ((x) >= (f)->rep->order())                                                   \
            raise(ErrorCode::out_of_range, "element index outside the field");          \
    } while (0)

grskit_status grskit_add(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        GRSKIT_CHECKED_ELT(f, b);
        *out = f->rep->add(a, b);
    });
}

grskit_status grskit_sub(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        GRSKIT_CHECKED_ELT(f, b);
        *out = f->rep->sub(a, b);
    });
}

grskit_status grskit_mul(const grskit_field* f, uint32_t a, uint32_t b, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        GRSKIT_CHECKED_ELT(f, b);
        *out = f->rep->mul(a, b);
    });
}

grskit_status grskit_neg(const grskit_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        *out = f->rep->neg(a);
    });
}

grskit_status grskit_inv(const grskit_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        *out = f->rep->inv(a);
    });
}

grskit_status grskit_pow(const grskit_field* f, uint32_t a, int64_t e, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        *out = f->rep->pow(a, e);
    });
}

grskit_status grskit_is_square(const grskit_field* f, uint32_t a, int* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        *out = f->rep->is_square(a) ? 1 : 0;
    });
}

grskit_status grskit_sqrt(const grskit_field* f, uint32_t a, uint32_t* out) {
    return guarded([&] {
        GRSKIT_CHECKED_ELT(f, a);
        *out = f->rep->sqrt(a);
    });
}

grskit_status grskit_code_build(const grskit_field* f, const char* descriptor_json,
                                grskit_code** out) {
    return guarded([&] {
        json j = json::parse(descriptor_json, nullptr, false);
        if (j.is_discarded()) raise(ErrorCode::spec_validation, "descriptor is not valid JSON");
        *out = new grskit_code{code_from_descriptor(f->rep, j)};
    });
}

void grskit_code_destroy(grskit_code* c) { delete c; }

size_t grskit_code_length(const grskit_code* c) { return c->rep.length(); }
size_t grskit_code_dimension(const grskit_code* c) { return c->rep.dimension(); }

grskit_status grskit_code_to_json(const grskit_code* c, char** out_json) {
    return guarded([&] { *out_json = dup_string(code_to_json(c->rep).dump()); });
}

grskit_status grskit_code_dual(const grskit_code* c, grskit_code** out) {
    return guarded([&] { *out = new grskit_code{c->rep.dual()}; });
}

grskit_status grskit_code_min_distance(const grskit_code* c, uint64_t max_work, uint32_t* out) {
    return guarded([&] {
        *out = c->rep.min_distance(max_work ? max_work : LinearCode::default_max_work);
    });
}

grskit_status grskit_code_classify(const grskit_code* c, uint64_t max_work, char** out_json) {
    return guarded([&] {
        auto profile = c->rep.classify(max_work ? max_work : LinearCode::default_max_work);
        *out_json = dup_string(profile_to_json(profile).dump());
    });
}

grskit_status grskit_code_is_self_dual(const grskit_code* c, int* out) {
    return guarded([&] { *out = c->rep.is_self_dual() ? 1 : 0; });
}

grskit_status grskit_job_run(const char* jobspec_json, grskit_line_cb cb, void* user,
                             uint64_t* out_disagreements) {
    return guarded([&] {
        JobOutcome outcome = run_job(std::string(jobspec_json), [&](const std::string& line) {
            if (cb) cb(user, line.c_str());
        });
        if (out_disagreements) *out_disagreements = outcome.disagreements;
    });
}

} // extern "C"
