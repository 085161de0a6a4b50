#include "utcell.h"

#include "utcell/diagram.hpp"
#include "utcell/invariants.hpp"
#include "utcell/poly.hpp"
#include "utcell/root.hpp"
#include "utcell/weyl.hpp"

#include "json.hpp"

#include <cstring>
#include <sstream>
#include <string>

using namespace utcell;

struct utcell_subset {
    BasicSubset d;
};

struct utcell_diagram {
    Diagram dia;
};

struct utcell_invariants {
    InvariantSet inv;
};

namespace {

thread_local std::string g_last_error;

utcell_status set_error(utcell_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
utcell_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& e) {
        return set_error(UTCELL_EINVAL, e.what());
    } catch (const std::exception& e) {
        return set_error(UTCELL_EINTERNAL, e.what());
    }
}

nlohmann::json roots_json(const RootSet& roots) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Root& r : roots) arr.push_back({r.row, r.col});
    return arr;
}

nlohmann::json roots_json(const std::vector<Root>& roots) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Root& r : roots) arr.push_back({r.row, r.col});
    return arr;
}

std::string roots_text(const RootSet& roots) {
    std::string out;
    for (const Root& r : roots) {
        if (!out.empty()) out += ",";
        out += to_string(r);
    }
    return out.empty() ? "(none)" : out;
}

PhiMap parse_phi(const std::string& text) {
    PhiMap phi;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t close = text.find(')', i);
        if (text[i] != '(' || close == std::string::npos)
            throw std::invalid_argument("phi: expected '(i,j)=v' near '" + text.substr(i) + "'");
        std::vector<Root> one = parse_root_list(text.substr(i, close - i + 1));
        i = close + 1;
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size() || text[i] != '=')
            throw std::invalid_argument("phi: expected '=' after root");
        ++i;
        std::size_t end = text.find(',', i);
        if (end == std::string::npos) end = text.size();
        std::string value = text.substr(i, end - i);
        // trim
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.front()))) value.erase(value.begin());
        while (!value.empty() && std::isspace(static_cast<unsigned char>(value.back()))) value.pop_back();
        phi[one.at(0)] = rational_from_string(value);
        i = end == text.size() ? end : end + 1;
    }
    return phi;
}

} // namespace

extern "C" {

const char* utcell_last_error(void) { return g_last_error.c_str(); }

void utcell_string_free(char* s) { std::free(s); }

utcell_status utcell_subset_parse(int n, const char* roots, utcell_subset** out) {
    if (!out) return set_error(UTCELL_EINVAL, "out pointer is null");
    *out = nullptr;
    return guarded([&]() -> utcell_status {
        std::vector<Root> list = roots ? parse_root_list(roots) : std::vector<Root>{};
        for (const Root& r : list)
            if (!r.positive() || !r.within(n))
                throw std::invalid_argument("root " + to_string(r) + " is not a positive root of the board");
        RootSet set(list.begin(), list.end());
        if (!is_basic(set, n))
            throw std::invalid_argument("subset is not basic: two roots share a row or a column");
        *out = new utcell_subset{BasicSubset::make(n, set)};
        return UTCELL_OK;
    });
}

void utcell_subset_free(utcell_subset* d) { delete d; }

utcell_status utcell_subset_render(const utcell_subset* d, utcell_format fmt, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["n"] = d->d.n;
            j["roots"] = roots_json(d->d.roots);
            *out = dup_string(j.dump());
        } else {
            std::string text;
            for (const Root& r : d->d.roots) {
                if (!text.empty()) text += ",";
                text += to_string(r);
            }
            *out = dup_string(text);
        }
        return UTCELL_OK;
    });
}

utcell_status utcell_subset_classify(const utcell_subset* d, utcell_format fmt, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        RootPartition part = classify(d->d);
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["n"] = d->d.n;
            j["D"] = roots_json(d->d.roots);
            j["singular"] = roots_json(part.singular);
            j["regular"] = roots_json(part.regular);
            j["m_set"] = roots_json(part.m_set);
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << "D       = " << roots_text(d->d.roots) << '\n'
               << "S(D)    = " << roots_text(part.singular) << '\n'
               << "R(D)    = " << roots_text(part.regular) << '\n'
               << "M(D)    = " << roots_text(part.m_set) << '\n';
            *out = dup_string(os.str());
        }
        return UTCELL_OK;
    });
}

utcell_status utcell_diagram_build(const utcell_subset* d, utcell_diagram** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    *out = nullptr;
    return guarded([&]() -> utcell_status {
        *out = new utcell_diagram{build_diagram(d->d)};
        return UTCELL_OK;
    });
}

void utcell_diagram_free(utcell_diagram* dia) { delete dia; }

utcell_status utcell_diagram_render(const utcell_diagram* dia, utcell_format fmt, char** out) {
    if (!dia || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        *out = dup_string(fmt == UTCELL_JSON ? dia->dia.render_json() : dia->dia.render_text());
        return UTCELL_OK;
    });
}

utcell_status utcell_diagram_extension(const utcell_diagram* dia, char** out) {
    if (!dia || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        *out = dup_string(roots_json(dia->dia.extension()).dump());
        return UTCELL_OK;
    });
}

utcell_status utcell_wd(const utcell_subset* d, utcell_format fmt, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        Permutation w = w_d(d->d);
        bool hom = is_homogeneous(w);
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["w"] = w.images();
            j["homogeneous"] = hom;
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << w.two_line() << '\n' << "homogeneous: " << (hom ? "true" : "false") << '\n';
            *out = dup_string(os.str());
        }
        return UTCELL_OK;
    });
}

utcell_status utcell_is_homogeneous(const int* images, int n, int* out_flag) {
    if (!images || !out_flag) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        Permutation w = Permutation::from_images(std::vector<int>(images, images + n));
        *out_flag = is_homogeneous(w) ? 1 : 0;
        return UTCELL_OK;
    });
}

utcell_status utcell_factorize(const utcell_subset* d, utcell_format fmt, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        const std::vector<Root> ext = factorize(d->d);
        const Permutation w = w_d(d->d);
        const Permutation prod = reflection_prefix(d->d.n, ext, static_cast<int>(ext.size()));
        const bool ok = prod == w;
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["w"] = w.images();
            j["reflections"] = roots_json(ext);
            j["product_matches"] = ok;
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            os << "w_D       = " << w.one_line() << '\n' << "reflections =";
            for (const Root& r : ext) os << ' ' << to_string(r);
            os << '\n' << "product matches: " << (ok ? "true" : "false") << '\n';
            *out = dup_string(os.str());
        }
        return ok ? UTCELL_OK : set_error(UTCELL_EINTERNAL, "reflection product differs from w_D");
    });
}

utcell_status utcell_invariants_compute(const utcell_subset* d, utcell_invariants** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    *out = nullptr;
    return guarded([&]() -> utcell_status {
        *out = new utcell_invariants{compute_invariants(d->d)};
        return UTCELL_OK;
    });
}

void utcell_invariants_free(utcell_invariants* inv) { delete inv; }

utcell_status utcell_invariants_render(const utcell_invariants* inv, utcell_format fmt, char** out) {
    if (!inv || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["n"] = inv->inv.d.n;
            j["D"] = roots_json(inv->inv.d.roots);
            j["extension"] = roots_json(inv->inv.ext);
            nlohmann::json gens = nlohmann::json::object();
            for (const auto& [xi, f] : inv->inv.generators) gens[to_string(xi)] = f.to_text();
            j["generators"] = gens;
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            for (const Root& xi : inv->inv.ext)
                os << 'F' << to_string(xi) << " = " << inv->inv.generators.at(xi).to_text() << '\n';
            *out = dup_string(os.str());
        }
        return UTCELL_OK;
    });
}

utcell_status utcell_relations(const utcell_subset* d, utcell_format fmt, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        const CellRelations rels = cell_relations(d->d);
        if (fmt == UTCELL_JSON) {
            nlohmann::json vanish = nlohmann::json::object(), keep = nlohmann::json::object();
            for (const auto& [r, p] : rels.vanishing) vanish[to_string(r)] = p.to_text();
            for (const auto& [r, p] : rels.nonvanishing) keep[to_string(r)] = p.to_text();
            nlohmann::json j;
            j["vanishing"] = vanish;
            j["nonvanishing"] = keep;
            *out = dup_string(j.dump());
        } else {
            std::ostringstream os;
            for (const auto& [r, p] : rels.vanishing)
                os << "0  = P" << to_string(r) << " = " << p.to_text() << '\n';
            for (const auto& [r, p] : rels.nonvanishing)
                os << "0 != P" << to_string(r) << " = " << p.to_text() << '\n';
            *out = dup_string(os.str());
        }
        return UTCELL_OK;
    });
}

utcell_status utcell_verify(const utcell_subset* d, const char* phi,
                            unsigned long seed, int trials, char** out) {
    if (!d || !out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        PhiMap fixed;
        const PhiMap* fixed_ptr = nullptr;
        if (phi && *phi) {
            fixed = parse_phi(phi);
            x_d_phi(d->d, fixed);  // validates keys and nonzero values
            fixed_ptr = &fixed;
        }
        bool pass = false;
        *out = dup_string(report_json(d->d, trials, seed, &pass, fixed_ptr));
        return pass ? UTCELL_OK : set_error(UTCELL_EVERIFY, "verification found a counterexample");
    });
}

utcell_status utcell_enumerate(int n, utcell_format fmt, char** out) {
    if (!out) return set_error(UTCELL_EINVAL, "null argument");
    return guarded([&]() -> utcell_status {
        if (n < 1 || n > 8)
            throw std::invalid_argument("enumerate: board size must be between 1 and 8");
        const std::vector<BasicSubset> subsets = enumerate_basic_subsets(n);
        int hom_count = 0;
        nlohmann::json arr = nlohmann::json::array();
        std::ostringstream os;
        for (const BasicSubset& d : subsets) {
            const Permutation w = w_d(d);
            const std::vector<Root> ext = extension(d);
            if (is_homogeneous(w)) ++hom_count;
            if (fmt == UTCELL_JSON) {
                arr.push_back({{"n", n},
                               {"roots", roots_json(d.roots)},
                               {"w", w.images()},
                               {"extension_size", ext.size()}});
            } else {
                os << "D = " << roots_text(d.roots) << "  |C(D)| = " << ext.size()
                   << "  w_D = " << w.one_line() << '\n';
            }
        }
        if (fmt == UTCELL_JSON) {
            nlohmann::json j;
            j["n"] = n;
            j["count"] = subsets.size();
            j["homogeneous_count"] = hom_count;
            j["subsets"] = arr;
            *out = dup_string(j.dump());
        } else {
            os << "basic subsets: " << subsets.size() << ", homogeneous elements: " << hom_count << '\n';
            *out = dup_string(os.str());
        }
        return UTCELL_OK;
    });
}

} // extern "C"
