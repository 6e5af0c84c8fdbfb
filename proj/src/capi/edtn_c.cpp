#include "edtn/edtn.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/geometry.hpp"
#include "core/harness.hpp"
#include "core/reference_dtn.hpp"
#include "core/version.hpp"

namespace {

thread_local std::string g_last_error;

edtn_status fail(edtn_status code, const char* what) {
    g_last_error = what ? what : "unknown error";
    return code;
}

edtn_status translate_exception() {
    try {
        throw;
    } catch (const std::domain_error& e) {
        return fail(EDTN_ERR_DOMAIN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(EDTN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(EDTN_ERR_PARSE, e.what());
    } catch (const std::runtime_error& e) {
        return fail(EDTN_ERR_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(EDTN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(EDTN_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(EDTN_ERR_INTERNAL, "unknown exception");
    }
}

void write_mat(const edtn::CMat& m, double* out) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            *out++ = m(i, j).real();
            *out++ = m(i, j).imag();
        }
}

edtn::Orientation to_orientation(int o) {
    return o == EDTN_ORIENT_OUTWARD ? edtn::Orientation::Outward : edtn::Orientation::Inward;
}

edtn::SemiclassicalParams to_core(const edtn_params& p) {
    return edtn::params_from_h_theta(p.h, p.theta);
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

struct edtn_medium {
    edtn::ElasticMedium medium;
};

extern "C" {

const char* edtn_version(void) { return edtn::kVersion; }

const char* edtn_last_error(void) { return g_last_error.c_str(); }

edtn_status edtn_params_from_tau(double tau_re, double tau_im, edtn_params* out) {
    if (!out) return fail(EDTN_ERR_INVALID_ARGUMENT, "out is NULL");
    try {
        const auto p = edtn::params_from_tau({tau_re, tau_im});
        out->h = p.h;
        out->theta = p.theta;
        out->z = {p.z.real(), p.z.imag()};
        out->tau = {p.tau.real(), p.tau.imag()};
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_medium_create_constant(double mu, double lambda, double density,
                                        edtn_medium** out) {
    if (!out) return fail(EDTN_ERR_INVALID_ARGUMENT, "out is NULL");
    try {
        *out = new edtn_medium{edtn::ElasticMedium::constant(mu, lambda, density)};
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_medium_create_profile(const edtn_field_profile* mu,
                                       const edtn_field_profile* lambda,
                                       const edtn_field_profile* density, edtn_medium** out) {
    if (!out || !mu || !lambda || !density)
        return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        auto field = [](const edtn_field_profile& f) {
            if (f.cos_amp == 0.0) return edtn::BoundaryField::constant(f.base);
            return edtn::BoundaryField::cosine(f.base, f.cos_amp, f.cos_freq, f.cos_phase);
        };
        *out = new edtn_medium{
            edtn::ElasticMedium(field(*mu), field(*lambda), field(*density))};
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

void edtn_medium_destroy(edtn_medium* medium) { delete medium; }

edtn_status edtn_region_classify(const edtn_medium* medium, double s, double r0, int* region,
                                 double* residual_s, double* residual_p) {
    if (!medium) return fail(EDTN_ERR_INVALID_ARGUMENT, "medium is NULL");
    try {
        const auto rep = edtn::region_classify(medium->medium, s, r0);
        if (region) *region = static_cast<int>(rep.region);
        if (residual_s) *residual_s = rep.residual_s;
        if (residual_p) *residual_p = rep.residual_p;
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_rho(const edtn_params* params, const edtn_medium* medium, double s, double r0,
                     int branch, edtn_complex* out) {
    if (!params || !medium || !out) return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        const auto p = to_core(*params);
        const auto med = medium->medium.at(s);
        const edtn::cd v =
            edtn::rho(p, med, r0, branch == 1 ? edtn::Branch::P : edtn::Branch::S);
        *out = {v.real(), v.imag()};
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_symbol_circle(const edtn_params* params, const edtn_medium* medium,
                               double radius, double s, double xi, int orientation,
                               double* md_ambient, double* md_frame, double* q,
                               edtn_complex* rho_s, edtn_complex* rho_p) {
    if (!params || !medium) return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        const auto chart = edtn::CurveChart::circle(radius);
        edtn::SymbolInput in;
        in.params = to_core(*params);
        in.med = medium->medium.at(s);
        in.pt = edtn::frame_point_on_curve(chart, s, xi);
        const bool outward = to_orientation(orientation) == edtn::Orientation::Outward;
        const auto sym = edtn::assemble_symbol(in, edtn::Orientation::Inward);
        edtn::CMat md = sym.md;
        edtn::CMat frame = edtn::frame_components(in.pt, sym.md);
        edtn::CMat qm = sym.q;
        if (outward) {
            md = edtn::to_outward_ambient(md);
            frame = edtn::to_outward_frame(frame);
            qm = edtn::to_outward_ambient(qm);
        }
        if (md_ambient) write_mat(md, md_ambient);
        if (md_frame) write_mat(frame, md_frame);
        if (q) write_mat(qm, q);
        if (rho_s) *rho_s = {sym.rho_s.real(), sym.rho_s.imag()};
        if (rho_p) *rho_p = {sym.rho_p.real(), sym.rho_p.imag()};
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_symbol_flat(const edtn_params* params, const edtn_medium* medium, int d,
                             const double* xi_prime, int orientation, double* out) {
    if (!params || !medium || !xi_prime || !out)
        return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        edtn::SymbolInput in;
        in.params = to_core(*params);
        in.med = medium->medium.at(0.0);
        std::vector<double> xp(xi_prime, xi_prime + d - 1);
        in.pt = edtn::frame_point_flat(d, xp);
        const auto sym = edtn::assemble_symbol(in, to_orientation(orientation));
        write_mat(sym.md, out);
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_halfspace_dn(const edtn_params* params, const edtn_medium* medium, int d,
                              const double* xi_prime, int orientation, double* out) {
    if (!params || !medium || !xi_prime || !out)
        return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        std::vector<double> xp(xi_prime, xi_prime + d - 1);
        const auto dn = edtn::halfspace_dn(to_core(*params), medium->medium.at(0.0), d, xp,
                                           to_orientation(orientation));
        write_mat(dn, out);
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_disk_dn_mode(const edtn_params* params, const edtn_medium* medium, double radius,
                              long n, int orientation, double* out, double* condition) {
    if (!params || !medium || !out) return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        const auto mode = edtn::disk_dn_mode(to_core(*params), medium->medium.at(0.0), radius, n,
                                             to_orientation(orientation));
        write_mat(mode.matrix, out);
        if (condition) *condition = mode.condition;
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_bessel_log_derivative(long n, double w_re, double w_im, edtn_complex* out) {
    if (!out) return fail(EDTN_ERR_INVALID_ARGUMENT, "out is NULL");
    try {
        const auto r = edtn::bessel_log_derivative(n, {w_re, w_im});
        *out = {r.value.real(), r.value.imag()};
        return EDTN_OK;
    } catch (const std::runtime_error& e) {
        return fail(EDTN_ERR_NO_CONVERGENCE, e.what());
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_run_experiment(const char* config_json, const char* out_dir, uint64_t seed,
                                int threads, int orientation_override, char** summary_json,
                                int* suite_pass) {
    if (!config_json) return fail(EDTN_ERR_INVALID_ARGUMENT, "config_json is NULL");
    try {
        const auto config = nlohmann::json::parse(config_json);
        edtn::RunOptions opts;
        opts.out_dir = out_dir ? out_dir : "";
        opts.seed = seed;
        opts.threads = threads > 0 ? threads : 1;
        if (orientation_override == EDTN_ORIENT_INWARD)
            opts.orientation = edtn::Orientation::Inward;
        else if (orientation_override == EDTN_ORIENT_OUTWARD)
            opts.orientation = edtn::Orientation::Outward;
        const auto rep = edtn::run_experiment(config, opts);
        if (summary_json) {
            *summary_json = dup_string(rep.summary.dump(2));
            if (!*summary_json) return fail(EDTN_ERR_INTERNAL, "out of memory");
        }
        if (suite_pass) *suite_pass = rep.pass ? 1 : 0;
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

edtn_status edtn_default_config(const char* experiment, char** config_json) {
    if (!experiment || !config_json) return fail(EDTN_ERR_INVALID_ARGUMENT, "NULL argument");
    try {
        *config_json = dup_string(edtn::default_config(experiment).dump(2));
        if (!*config_json) return fail(EDTN_ERR_INTERNAL, "out of memory");
        return EDTN_OK;
    } catch (...) {
        return translate_exception();
    }
}

void edtn_string_free(char* s) { std::free(s); }

}  // extern "C"
