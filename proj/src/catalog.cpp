#include "sejoin/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <future>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "sejoin/errors.hpp"

namespace sejoin {

using nlohmann::ordered_json;

std::vector<YpqEinstein> enumerate_ypq(long p_max) {
    if (p_max < 2) throw DomainError("enumerate_ypq: need p_max >= 2");
    long workers = std::clamp<long>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<std::vector<YpqEinstein>>> parts;
    for (long w = 0; w < workers; ++w)
        parts.push_back(std::async(std::launch::async, [=] {
            std::vector<YpqEinstein> found;
            for (long p = 2 + w; p <= p_max; p += workers)
                for (long q = 1; q < p; ++q)
                    if (std::gcd(p, q) == 1 && is_quasi_regular(p, q)) found.push_back(solve_ypq(p, q));
            return found;
        }));
    std::vector<YpqEinstein> out;
    for (auto& f : parts) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return std::tie(x.p, x.q) < std::tie(y.p, y.q); });
    return out;
}

SERecord build_record(const JoinSpec& spec) {
    SERecord r;
    r.spec = spec;
    r.smoothness = smoothness_check(spec);
    r.torsion = h4_torsion(spec);
    if (!r.smoothness.smooth) r.notes.push_back("non-smooth join: torsion evaluated outside its hypotheses");
    try {
        r.ray = se_ray_from_w(spec.w1, spec.w2);
        if (!r.ray->quasi_regular) {
            r.notes.push_back("irregular Reeb ray: no quotient orbifold");
            return r;
        }
        r.quotient = quotient_orbifold(spec, *r.ray);
        r.log_fano = is_log_fano(r.quotient->orbifold());
        CalabiData d = calabi_data(spec, *r.ray, *r.quotient);
        r.r3 = d.r3;
        r.ke = ke_conditions(d);
        if (r.ke.ke1 && r.ke.ke2) {
            r.profile = ke_profile(d);
            r.positive = true;
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

SERecord build_record(const YpqEinstein& ypq, const Integer& w1, const Integer& w2) {
    try {
        return build_record(canonical_join(ypq, w1, w2));
    } catch (const DomainError& e) {
        SERecord r;
        r.spec = {ypq, 0, 0, w1, w2};
        r.error = e.what();
        return r;
    }
}

std::vector<SERecord> enumerate_joins(const YpqEinstein& ypq, const std::vector<Rational>& k_list) {
    std::vector<SERecord> out;
    for (const auto& k : k_list) {
        SERecord r;
        try {
            auto [w1, w2] = w_from_k(k);
            r = build_record(ypq, w1, w2);
        } catch (const DomainError& e) {
            r.spec = {ypq, 0, 0, 0, 0};
            r.error = e.what();
        }
        r.k = k;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SERecord> enumerate_joins(const YpqEinstein& ypq, long w_bound) {
    std::vector<SERecord> out;
    for (long w1 = 2; w1 <= w_bound; ++w1)
        for (long w2 = 1; w2 < w1; ++w2)
            if (std::gcd(w1, w2) == 1) out.push_back(build_record(ypq, w1, w2));
    return out;
}

void sort_records(std::vector<SERecord>& records) {
    std::stable_sort(records.begin(), records.end(), [](const SERecord& x, const SERecord& y) {
        return std::tie(x.spec.ypq.p, x.spec.ypq.q, x.spec.w1, x.spec.w2) <
               std::tie(y.spec.ypq.p, y.spec.ypq.q, y.spec.w1, y.spec.w2);
    });
}

namespace {

std::string s(const Integer& x) { return x.get_str(); }
std::string s(const Rational& x) { return to_string(x); }

ordered_json pair(const Integer& x, const Integer& y) { return ordered_json::array({s(x), s(y)}); }

ordered_json root_json(const RealRoot& r) {
    if (is_rational(r)) return s(std::get<Rational>(r));
    return nullptr;
}

ordered_json root_bounds(const RealRoot& r, int digits) {
    if (is_rational(r)) return nullptr;
    const auto& a = std::get<AlgebraicRoot>(r);
    Rational width = 1;
    for (int i = 0; i < digits + 2; ++i) width /= 10;
    auto fine = a.width() < width ? a : a.refined(width);
    return ordered_json::array({to_decimal(fine.lo(), digits, Rounding::Down), to_decimal(fine.hi(), digits, Rounding::Up)});
}

}  // namespace

ordered_json record_json(const SERecord& r, int digits) {
    const auto& y = r.spec.ypq;
    ordered_json j;
    j["p"] = s(y.p);
    j["q"] = s(y.q);
    j["v2"] = pair(y.v2_0, y.v2_inf);
    j["m2"] = s(y.m2);
    j["a"] = s(y.a);
    j["I"] = s(y.fano_index);
    j["l1"] = s(r.spec.l1);
    j["l2"] = s(r.spec.l2);
    j["w"] = pair(r.spec.w1, r.spec.w2);
    if (r.ray) {
        j["k"] = root_json(r.ray->k);
        j["k_bounds"] = root_bounds(r.ray->k, digits);
        j["regularity"] = r.ray->quasi_regular ? "quasi-regular" : "irregular";
        j["ratio_bounds"] = root_bounds(r.ray->ratio, digits);
    } else {
        j["k"] = r.k ? ordered_json(s(*r.k)) : ordered_json(nullptr);
        j["k_bounds"] = nullptr;
        j["regularity"] = nullptr;
        j["ratio_bounds"] = nullptr;
    }
    const auto& qt = r.quotient;
    j["v3"] = r.ray && r.ray->quasi_regular ? pair(r.ray->v3_0, r.ray->v3_inf) : ordered_json(nullptr);
    j["s"] = qt ? ordered_json(s(qt->s)) : ordered_json(nullptr);
    j["m3"] = qt ? ordered_json(s(qt->m3)) : ordered_json(nullptr);
    j["n"] = qt ? ordered_json(s(qt->n)) : ordered_json(nullptr);
    j["b"] = qt ? ordered_json(s(qt->b)) : ordered_json(nullptr);
    j["c"] = qt ? ordered_json(s(qt->c)) : ordered_json(nullptr);
    if (qt) {
        j["m_vector"] = ordered_json::array();
        for (const auto& m : qt->m) j["m_vector"].push_back(s(m));
    } else {
        j["m_vector"] = nullptr;
    }
    j["torsion"] = r.torsion ? pair(r.torsion->A, r.torsion->B) : ordered_json(nullptr);
    j["smooth"] = r.smoothness.smooth;
    j["ke1"] = r.ke.ke1;
    j["ke2"] = r.ke.ke2;
    j["log_fano"] = r.log_fano;
    j["positive"] = r.positive;
    j["r3"] = r.r3 ? ordered_json(s(*r.r3)) : ordered_json(nullptr);
    if (r.profile) {
        j["F_coeffs"] = ordered_json::array();
        for (int i = 0; i <= r.profile->F.degree(); ++i) j["F_coeffs"].push_back(s(r.profile->F.coeff(i)));
    } else {
        j["F_coeffs"] = nullptr;
    }
    j["notes"] = r.notes;
    j["error"] = r.error;
    return j;
}

std::vector<ExampleExpectation> worked_example_expectations() {
    auto strs = [](std::initializer_list<long> xs) {
        ordered_json a = ordered_json::array();
        for (long x : xs) a.push_back(std::to_string(x));
        return a;
    };
    std::vector<ExampleExpectation> out;
    out.push_back({"Y^{13,8}, k=2", 13, 8, 2,
                   {{"v2", strs({7, 5})}, {"m2", "13"}, {"a", "70"}, {"I", "12"}, {"w", strs({34, 11})},
                    {"l1", "4"}, {"l2", "15"}, {"v3", strs({17, 11})}, {"s", "1"}, {"m3", "15"}, {"n", "748"},
                    {"b", "78540"}, {"c", "748"}, {"m_vector", strs({1, 1, 91, 65, 255, 165})},
                    {"torsion", strs({1330875, 5984})}, {"smooth", true}, {"r3", "1/3"}, {"ke1", true},
                    {"ke2", true}}});
    out.push_back({"Y^{13,7}, k=2", 13, 7, 2,
                   {{"a", "36"}, {"I", "7"}, {"w", strs({34, 11})}, {"l1", "7"}, {"l2", "45"}, {"n", "1309"},
                    {"b", "78540"}, {"c", "1309"}, {"m_vector", strs({1, 1, 52, 39, 765, 495})},
                    {"torsion", strs({4106700, 18326})}, {"ke1", true}, {"ke2", true}}});
    for (long t = 1; t <= 10; ++t) {
        YpqEinstein y = family_member(255 * t + 10);
        long l1 = 306 * t + 13;
        out.push_back({"family t=" + std::to_string(t), y.p, y.q, 3,
                       {{"w", strs({17, 3})}, {"v3", strs({17, 9})}, {"I", std::to_string(5 * l1)},
                        {"l1", std::to_string(l1)}, {"l2", "4"}, {"n", std::to_string(51 * l1)}, {"m3", "2"},
                        {"s", "2"}, {"smooth", true}, {"r3", "1/2"}, {"ke1", true}, {"ke2", true}}});
        auto& f = out.back().fields;
        f["m_vector"] = ordered_json::array({"1", "1", s(y.m2_0), s(y.m2_inf), "34", "18"});
    }
    return out;
}

VerificationReport verify_worked_examples(const std::vector<ExampleExpectation>& expectations) {
    VerificationReport rep;
    std::vector<SERecord> built;
    for (const auto& ex : expectations) {
        ++rep.blocks;
        SERecord r;
        try {
            auto recs = enumerate_joins(solve_ypq(ex.p, ex.q), {ex.k});
            r = recs.front();
        } catch (const std::exception& e) {
            rep.failures.push_back(ex.label + ": " + e.what());
            continue;
        }
        if (!r.error.empty()) rep.failures.push_back(ex.label + ": " + r.error);
        auto j = record_json(r);
        bool ok = true;
        for (const auto& [key, want] : ex.fields.items()) {
            if (!j.contains(key)) {
                rep.failures.push_back(ex.label + ": unknown field " + key);
                ok = false;
            } else if (j[key] != want) {
                rep.failures.push_back(ex.label + ": field " + key + " expected " + want.dump() + " got " +
                                       j[key].dump());
                ok = false;
            }
        }
        if (ok) rep.passed.push_back(ex.label);
        built.push_back(std::move(r));
    }

    const SERecord* y8 = nullptr;
    const SERecord* y7 = nullptr;
    for (const auto& r : built) {
        if (r.spec.ypq.p == 13 && r.spec.ypq.q == 8) y8 = &r;
        if (r.spec.ypq.p == 13 && r.spec.ypq.q == 7) y7 = &r;
    }
    if (y8 && y7 && y8->torsion && y7->torsion) {
        ++rep.blocks;
        if (homotopy_distinct(*y8->torsion, *y7->torsion)) rep.passed.push_back("Y^{13,8} vs Y^{13,7} distinct");
        else rep.failures.push_back("Y^{13,8} vs Y^{13,7}: torsion does not distinguish them");
    }

    ++rep.blocks;
    SERecord zero = build_record(make_join_spec(family_member(0), 1, 4, 17, 3));
    if (zero.smoothness.smooth) rep.failures.push_back("family k2=0: expected non-smooth");
    else rep.passed.push_back("family k2=0 non-smooth");
    return rep;
}

VerificationReport verify_worked_examples() { return verify_worked_examples(worked_example_expectations()); }

std::vector<std::string> csv_columns() {
    return {"p",  "q",  "v2", "m2", "a",  "I",        "l1",      "l2",     "w",    "k",   "k_bounds",
            "regularity", "v3", "s",  "m3", "n",        "b",       "c",      "m_vector", "torsion", "smooth",
            "ke1", "ke2", "log_fano", "positive", "r3", "F_coeffs", "error"};
}

namespace {

std::string csv_cell(const ordered_json& v) {
    std::string raw;
    if (v.is_null()) raw = "";
    else if (v.is_string()) raw = v.get<std::string>();
    else if (v.is_boolean()) raw = v.get<bool>() ? "true" : "false";
    else if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i) raw += (i ? ";" : "") + csv_cell(v[i]);
    } else raw = v.dump();
    if (raw.find_first_of(",\"\r\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char ch : raw) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace

void write_export(std::vector<SERecord> records, ExportFormat format, std::ostream& out, int digits) {
    sort_records(records);
    if (format == ExportFormat::Json) {
        ordered_json doc;
        doc["schema_version"] = schema_version;
        doc["records"] = ordered_json::array();
        for (const auto& r : records) doc["records"].push_back(record_json(r, digits));
        out << doc.dump(2) << "\n";
        return;
    }
    auto cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\r\n";
    for (const auto& r : records) {
        auto j = record_json(r, digits);
        for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_cell(j[cols[i]]);
        out << "\r\n";
    }
}

void write_export_file(std::vector<SERecord> records, ExportFormat format, const std::string& path, int digits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_export(std::move(records), format, out, digits);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path);
}

CalabiProfile profile_from_json(const nlohmann::json& record) {
    if (!record.contains("r3") || !record["r3"].is_string() || !record.contains("F_coeffs") ||
        !record["F_coeffs"].is_array())
        throw DomainError("record has no profile (r3 and F_coeffs required)");
    std::vector<Rational> coeffs;
    for (const auto& c : record["F_coeffs"]) coeffs.push_back(parse_rational(c.get<std::string>()));
    return {parse_rational(record["r3"].get<std::string>()), Polynomial(coeffs)};
}

}  // namespace sejoin
