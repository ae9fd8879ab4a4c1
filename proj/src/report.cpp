#include "rectwalg/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace rectwalg {

using nlohmann::json;

namespace {

int opt(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

json record_json(const CheckRecord& r) {
    json j;
    j["schema"] = 1;
    j["check"] = r.check;
    j["n"] = r.n;
    j["l"] = r.l;
    j["eps"] = std::string(1, r.eps);
    if (r.i) j["i"] = *r.i;
    if (r.j) j["j"] = *r.j;
    if (r.r) j["r"] = *r.r;
    j["status"] = r.pass ? "pass" : "fail";
    if (!r.pass) j["witness"] = r.witness;
    return j;
}

json row_class_json(const RowClass& rc) {
    json rows = json::object();
    for (const auto& [i, vals] : rc.stored_rows()) {
        json arr = json::array();
        for (const auto& v : vals) arr.push_back(v.str());
        rows[std::to_string(i)] = arr;
    }
    json j;
    j["n"] = rc.n();
    j["l"] = rc.l();
    j["rows"] = rows;
    return j;
}

json classification_json(const ClassificationResult& res) {
    json j;
    j["schema"] = 1;
    j["n"] = res.sd.n;
    j["l"] = res.sd.l;
    j["eps"] = std::string(1, sign_char(res.sd.eps));
    j["class"] = row_class_json(res.rc);
    j["findim_tableaux"] = res.findim_tableaux;
    j["findim_yangian"] = res.findim_yangian;
    j["agree"] = res.agree();
    j["branch"] = res.branch;
    if (res.witness) {
        json grid = json::array();
        for (int i : index_set(res.witness->n())) {
            json row = json::array();
            for (int c : index_set(res.witness->l())) row.push_back(res.witness->at(i, c).str());
            grid.push_back(row);
        }
        j["witness"] = grid;
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string classification_text(const ClassificationResult& res) {
    std::ostringstream os;
    os << "n=" << res.sd.n << " l=" << res.sd.l << " eps=" << sign_char(res.sd.eps) << " class{"
       << res.rc.str() << "} findim_tableaux=" << (res.findim_tableaux ? "yes" : "no")
       << " findim_yangian=" << (res.findim_yangian ? "yes" : "no") << " branch=" << res.branch
       << " agree=" << (res.agree() ? "yes" : "no");
    return os.str();
}

} // namespace

std::string report_render(std::vector<CheckRecord> records, OutputFormat fmt) {
    std::stable_sort(records.begin(), records.end(),
                     [](const CheckRecord& a, const CheckRecord& b) {
                         auto key = [](const CheckRecord& r) {
                             return std::make_tuple(r.check, r.n, r.l, r.eps, opt(r.i, INT32_MIN),
                                                    opt(r.j, INT32_MIN), opt(r.r, INT32_MIN));
                         };
                         return key(a) < key(b);
                     });
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(record_json(r));
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : records) {
        os << r.check << " n=" << r.n << " l=" << r.l << " eps=" << r.eps;
        if (r.i) os << " i=" << *r.i;
        if (r.j) os << " j=" << *r.j;
        if (r.r) os << " r=" << *r.r;
        os << (r.pass ? " PASS" : " FAIL");
        if (!r.pass) os << " witness: " << r.witness;
        os << "\n";
    }
    return os.str();
}

std::string classification_render(const ClassificationResult& res, OutputFormat fmt) {
    if (fmt == OutputFormat::json) return classification_json(res).dump(2) + "\n";
    return classification_text(res) + "\n";
}

std::string classification_render(const std::vector<ClassificationResult>& results,
                                  OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json arr = json::array();
        for (const auto& r : results) arr.push_back(classification_json(r));
        return arr.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& r : results) os << classification_text(r) << "\n";
    return os.str();
}

std::string orbit_render(const RowClass& rc, const std::set<RowClass>& orb, OutputFormat fmt) {
    if (fmt == OutputFormat::json) {
        json j;
        j["schema"] = 1;
        j["class"] = row_class_json(rc);
        json arr = json::array();
        for (const auto& e : orb) arr.push_back(row_class_json(e));
        j["orbit"] = arr;
        j["size"] = orb.size();
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "class{" << rc.str() << "} orbit size " << orb.size() << "\n";
    for (const auto& e : orb) os << "  {" << e.str() << "}\n";
    return os.str();
}

std::string row_class_to_json(const RowClass& rc) { return row_class_json(rc).dump(2) + "\n"; }

RowClass row_class_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("n") || !j.contains("l") || !j.contains("rows"))
        throw std::invalid_argument("row class JSON needs n, l, rows");
    int n = j.at("n").get<int>();
    int l = j.at("l").get<int>();
    std::map<int, std::vector<Number>> rows;
    for (const auto& [key, arr] : j.at("rows").items()) {
        int i = std::stoi(key);
        std::vector<Number> vals;
        for (const auto& v : arr) vals.push_back(Number::parse(v.get<std::string>()));
        rows[i] = std::move(vals);
    }
    return RowClass(n, l, std::move(rows));
}

std::vector<Number> parse_pool(const std::string& text) {
    std::vector<Number> out;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) {
        // trim blanks
        size_t a = cur.find_first_not_of(" \t");
        size_t b = cur.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(Number::parse(cur.substr(a, b - a + 1)));
    }
    if (out.empty()) throw std::invalid_argument("pool: no entries");
    return out;
}

} // namespace rectwalg
