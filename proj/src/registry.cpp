#include "ladist/registry.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ladist/errors.hpp"

namespace ladist {

std::string dualityName(Duality d) {
    switch (d) {
        case Duality::Distinguished: return "Distinguished";
        case Duality::EtaDistinguished: return "EtaDistinguished";
        case Duality::NotConjSelfDual: return "NotConjSelfDual";
    }
    return "?";
}

Duality dualityFromName(const std::string& name) {
    if (name == "Distinguished") return Duality::Distinguished;
    if (name == "EtaDistinguished") return Duality::EtaDistinguished;
    if (name == "NotConjSelfDual") return Duality::NotConjSelfDual;
    throw registry_error("unknown duality class: " + name);
}

CuspidalRegistry::CuspidalRegistry(std::vector<CuspidalDatum> data) {
    for (auto& d : data) {
        if (d.degree < 1) throw registry_error(d.id + ": degree must be positive");
        if (d.l < 1 || d.l % 2 == 0) throw registry_error(d.id + ": l must be a positive odd integer");
        if ((d.duality == Duality::NotConjSelfDual) != d.dualPartner.has_value())
            throw registry_error(d.id + ": dualPartner is required exactly for NotConjSelfDual");
        if (d.dualPartner && *d.dualPartner == d.id)
            throw registry_error(d.id + ": a NotConjSelfDual cuspidal cannot be its own partner");
        if (!table_.emplace(d.id, d).second)
            throw registry_error("duplicate cuspidal id: " + d.id);
    }
    for (const auto& [id, d] : table_) {
        if (!d.dualPartner) continue;
        auto it = table_.find(*d.dualPartner);
        if (it == table_.end())
            throw registry_error(id + ": dual partner " + *d.dualPartner + " is not registered");
        const CuspidalDatum& p = it->second;
        if (!p.dualPartner || *p.dualPartner != id)
            throw registry_error(id + ": dual partner pairing is not involutive");
        if (p.degree != d.degree || p.l != d.l)
            throw registry_error(id + ": dual partner must share degree and l");
    }
}

CuspidalRegistry CuspidalRegistry::fromJsonText(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw registry_error(std::string("registry JSON: ") + e.what());
    }
    if (!j.is_array()) throw registry_error("registry JSON must be an array");
    std::vector<CuspidalDatum> data;
    for (const auto& entry : j) {
        CuspidalDatum d;
        d.id = entry.at("id").get<std::string>();
        d.degree = entry.at("degree").get<int>();
        d.l = entry.at("l").get<int>();
        d.duality = dualityFromName(entry.at("duality").get<std::string>());
        if (entry.contains("dualPartner")) d.dualPartner = entry["dualPartner"].get<std::string>();
        data.push_back(std::move(d));
    }
    return CuspidalRegistry(std::move(data));
}

CuspidalRegistry CuspidalRegistry::fromFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw registry_error("cannot open registry file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return fromJsonText(os.str());
}

const CuspidalDatum& CuspidalRegistry::at(const std::string& id) const {
    auto it = table_.find(id);
    if (it == table_.end()) throw registry_error("unknown cuspidal id: " + id);
    return it->second;
}

std::vector<std::string> CuspidalRegistry::ids() const {
    std::vector<std::string> out;
    for (const auto& [id, d] : table_) out.push_back(id);
    return out;
}

bool CuspidalRegistry::chiDistinguished(const TwistedCuspidal& c, int m) const {
    const CuspidalDatum& d = at(c.base);
    if (!c.exponent.isZero()) return false;
    int parity = ((m + c.etaPow) % 2 + 2) % 2;
    switch (d.duality) {
        case Duality::Distinguished: return parity == 0;
        case Duality::EtaDistinguished: return parity == 1;
        case Duality::NotConjSelfDual: return false;
    }
    return false;
}

TwistedCuspidal CuspidalRegistry::conjugateDual(const TwistedCuspidal& c) const {
    const CuspidalDatum& d = at(c.base);
    std::string base = d.dualPartner ? *d.dualPartner : c.base;
    return TwistedCuspidal(base, -c.exponent, c.etaPow);
}

bool CuspidalRegistry::isConjSelfDualLine(const TwistedCuspidal& c) const {
    return at(c.base).duality != Duality::NotConjSelfDual;
}

} // namespace ladist
