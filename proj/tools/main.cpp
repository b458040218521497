#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladist/cosets.hpp"
#include "ladist/distinction.hpp"
#include "ladist/errors.hpp"
#include "ladist/expr.hpp"
#include "ladist/lfactor.hpp"
#include "ladist/spherical.hpp"

using json = nlohmann::ordered_json;
using namespace ladist;

namespace {

std::vector<long long> parseIntList(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::logic_error&) {
            throw argument_error("bad integer in " + what + ": " + item);
        }
    }
    if (out.empty()) throw argument_error(what + " must be a comma-separated integer list");
    return out;
}

std::vector<std::string> splitList(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        // trim surrounding blanks
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

json verdictToJson(const DistinctionVerdict& v) {
    json j;
    j["status"] = statusName(v.status);
    if (v.witness) {
        json w = json::array();
        for (int i : *v.witness) w.push_back(i + 1); // 1-indexed for display
        j["witness"] = w;
    }
    j["trace"] = v.trace;
    return j;
}

json cosetToJson(const CosetMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.t; ++i) {
        json row = json::array();
        for (int j = 0; j < a.t; ++j) row.push_back(a.at(i, j));
        rows.push_back(row);
    }
    return rows;
}

void emit(const json& j, bool pretty) {
    if (pretty) {
        // aligned plain text: one "key: value" line per top-level field
        for (const auto& [key, value] : j.items()) {
            std::cout << key << ": ";
            if (value.is_string()) std::cout << value.get<std::string>();
            else std::cout << value.dump();
            std::cout << "\n";
        }
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

// A parsed product routed to the right classifier: a lone discrete series or
// standard-module data, a proper ladder, or a unitary product.
DistinctionVerdict classifyExpression(const CuspidalRegistry& reg, const Expression& e) {
    bool allSegments = true;
    for (const ExprItem& item : e.items)
        if (!std::holds_alternative<Segment>(item)) allSegments = false;

    if (allSegments && e.items.size() == 1)
        return discreteSeriesDistinction(reg, std::get<Segment>(e.items[0]));
    if (allSegments) {
        std::vector<Segment> segs;
        for (const ExprItem& item : e.items) segs.push_back(std::get<Segment>(item));
        return standardModuleDistinguished(reg, segs);
    }
    if (e.items.size() == 1 && std::holds_alternative<Multisegment>(e.items[0])) {
        const Multisegment& ms = std::get<Multisegment>(e.items[0]);
        LadderClass c = classifyMultisegment(ms);
        if (!c.isLadder) throw argument_error("Ladder[...] input is not a ladder");
        if (c.isProper) return properLadderDistinguished(reg, ms);
        // a non-proper ladder splits into mutually unlinked proper chains
        std::vector<ProductFactor> chains;
        std::vector<Segment> current = {ms[0]};
        for (size_t i = 1; i < ms.size(); ++i) {
            if (relate(ms[i], ms[i - 1]).precedes) {
                current.push_back(ms[i]);
            } else {
                chains.push_back(Multisegment(current));
                current = {ms[i]};
            }
        }
        chains.push_back(Multisegment(current));
        return unitaryDistinguished(reg, chains);
    }
    // general product: unitary route; bare centered segments are rank-one blocks
    std::vector<ProductFactor> factors;
    for (const ExprItem& item : e.items) {
        if (std::holds_alternative<Segment>(item)) {
            const Segment& s = std::get<Segment>(item);
            if (!s.isCentered())
                throw argument_error("bare segments in a unitary product must be centered");
            factors.push_back(UnitaryFactor(UnitaryFactor::Kind::Speh, s, 1));
        } else if (std::holds_alternative<Multisegment>(item)) {
            factors.push_back(std::get<Multisegment>(item));
        } else {
            factors.push_back(std::get<UnitaryFactor>(item));
        }
    }
    return unitaryDistinguished(reg, factors);
}

struct Options {
    std::string registryPath;
    std::string expr;
    std::string mbar;
    std::string partition;
    std::string asai;
    std::string rs;
    std::string var = "s";
    std::string sigma;
    std::string mode = "both";
    std::string rho;
    std::string at;
    int k = 1;
    int l = 1;
    int r = 0;
    int maxLemma = 4;
    bool pretty = false;
};

int runDistinguish(const Options& opt) {
    CuspidalRegistry reg = CuspidalRegistry::fromFile(opt.registryPath);
    Expression e = parseExpression(opt.expr);
    DistinctionVerdict v = classifyExpression(reg, e);
    json j;
    j["expr"] = printExpression(e);
    j.update(verdictToJson(v));
    emit(j, opt.pretty);
    return 0;
}

int runCosets(const Options& opt) {
    auto mbar = parseIntList(opt.mbar, "--mbar");
    auto all = enumerateCosets(mbar);
    if (opt.pretty) {
        std::cout << "count: " << all.size() << "\n";
        for (const CosetMatrix& a : all) std::cout << a.str() << "\n";
        return 0;
    }
    json j;
    j["mbar"] = mbar;
    j["count"] = all.size();
    json list = json::array();
    for (const CosetMatrix& a : all) list.push_back(cosetToJson(a));
    j["cosets"] = list;
    emit(j, false);
    return 0;
}

int runContrib(const Options& opt) {
    CuspidalRegistry reg = CuspidalRegistry::fromFile(opt.registryPath);
    Expression e = parseExpression(opt.sigma);
    std::vector<Segment> sigma;
    for (const ExprItem& item : e.items) {
        if (!std::holds_alternative<Segment>(item))
            throw argument_error("--sigma must be a product of discrete series segments");
        sigma.push_back(std::get<Segment>(item));
    }
    std::vector<long long> mbar;
    for (const Segment& s : sigma) mbar.push_back(s.realizedDegree(reg));
    auto contrib = contributingCosets(reg, sigma, mbar);
    if (opt.pretty) {
        std::cout << "sigma: " << printExpression(e) << "\n";
        std::cout << "count: " << contrib.size() << "\n";
        for (const CosetMatrix& a : contrib) std::cout << a.str() << "\n";
        return 0;
    }
    json j;
    j["sigma"] = printExpression(e);
    j["mbar"] = mbar;
    j["count"] = contrib.size();
    json list = json::array();
    for (const CosetMatrix& a : contrib) list.push_back(cosetToJson(a));
    j["cosets"] = list;
    emit(j, false);
    return 0;
}

int runJacquet(const Options& opt) {
    CuspidalRegistry reg = CuspidalRegistry::fromFile(opt.registryPath);
    Expression e = parseExpression(opt.expr);
    if (e.items.size() != 1 || !std::holds_alternative<Segment>(e.items[0]))
        throw argument_error("--expr must be a single segment");
    const Segment& d = std::get<Segment>(e.items[0]);
    auto parts = parseIntList(opt.partition, "--partition");
    auto split = jacquetDiscrete(reg, d, parts);
    json j;
    j["input"] = printSegment(d);
    j["partition"] = parts;
    j["adapted"] = split.has_value();
    if (split) {
        json factors = json::array();
        for (const Segment& s : *split) factors.push_back(printSegment(s));
        j["factors"] = factors;
    }
    emit(j, opt.pretty);
    return 0;
}

int runLfactor(const Options& opt) {
    LinForm form = LinForm::var(opt.var);
    json j;
    if (!opt.asai.empty()) {
        auto parts = splitList(opt.asai, ';');
        if (parts.size() != 2 || (parts[0] != "+" && parts[0] != "-"))
            throw argument_error("--asai expects \"<+|->;a,b,...\"");
        auto chars = splitList(parts[1], ',');
        AtomKind kind = parts[0] == "+" ? AtomKind::AsaiPlus : AtomKind::AsaiMinus;
        RatFun v = unramifiedAsai(chars, kind, form);
        j["kind"] = parts[0] == "+" ? "asai+" : "asai-";
        j["chars"] = chars;
        j["var"] = opt.var;
        j["value"] = v.str();
    } else if (!opt.rs.empty()) {
        auto parts = splitList(opt.rs, ';');
        if (parts.size() != 2) throw argument_error("--rs expects \"a,b;c,d\"");
        auto chars = splitList(parts[0], ',');
        auto chars2 = splitList(parts[1], ',');
        RatFun v = unramifiedRankinSelberg(chars, chars2, form);
        j["kind"] = "rankin-selberg";
        j["chars"] = chars;
        j["chars2"] = chars2;
        j["var"] = opt.var;
        j["value"] = v.str();
    } else {
        throw argument_error("one of --asai or --rs is required");
    }
    emit(j, opt.pretty);
    return 0;
}

int runPeriod(const Options& opt) {
    PeriodSpec spec;
    for (const std::string& block : splitList(opt.sigma, '|'))
        spec.blocks.push_back(splitList(block, ','));
    if (spec.blocks.empty()) throw argument_error("--sigma must list at least one block");
    if (opt.r != 0 && opt.r != spec.r())
        throw argument_error("--r disagrees with the number of blocks in --sigma");
    json j;
    j["r"] = spec.r();
    json blocks = json::array();
    for (const auto& b : spec.blocks) blocks.push_back(b);
    j["sigma"] = blocks;
    if (opt.mode == "closed") {
        j["closed"] = sphericalPeriodClosed(spec).str();
    } else if (opt.mode == "recursive") {
        j["recursive"] = sphericalPeriodRecursive(spec).str();
    } else if (opt.mode == "both") {
        RatFun closed = sphericalPeriodClosed(spec);
        RatFun recursive = sphericalPeriodRecursive(spec);
        j["closed"] = closed.str();
        j["recursive"] = recursive.str();
        j["equal"] = (closed == recursive);
    } else {
        throw argument_error("--mode must be closed, recursive or both");
    }
    emit(j, opt.pretty);
    return 0;
}

int runAlpha(const Options& opt) {
    FactorProduct p = alphaFactor(opt.rho, opt.k, opt.l);
    json j;
    j["rho"] = opt.rho;
    j["k"] = opt.k;
    j["l"] = opt.l;
    json atoms = json::array();
    for (const auto& [a, e] : p.atoms()) {
        json atom;
        atom["factor"] = a.str();
        atom["exponent"] = e;
        atoms.push_back(atom);
    }
    j["atoms"] = atoms;
    if (!opt.at.empty()) {
        if (opt.registryPath.empty())
            throw argument_error("--at needs --registry for the duality data");
        CuspidalRegistry reg = CuspidalRegistry::fromFile(opt.registryPath);
        std::map<std::string, Rational> point = {{"s", Rational::parse(opt.at)}};
        j["at"] = opt.at;
        j["poleOrder"] = poleOrder(reg, p, point);
    }
    emit(j, opt.pretty);
    return 0;
}

int runVerifyLemmas(const Options& opt) {
    json rows = json::array();
    bool allOk = true;
    for (auto kind : {ReductionLemma::BB, ReductionLemma::AB})
        for (int a = 1; a <= opt.maxLemma; ++a)
            for (int b = 1; b <= opt.maxLemma; ++b) {
                LemmaReport rep = verifyReductionLemma(kind, a, b);
                allOk = allOk && rep.ok;
                json row;
                row["kind"] = kind == ReductionLemma::BB ? "BB" : "AB";
                row["a"] = a;
                row["b"] = b;
                row["length"] = rep.lengthMu;
                row["ok"] = rep.ok;
                rows.push_back(row);
            }
    json j;
    j["max"] = opt.maxLemma;
    j["ok"] = allOk;
    j["results"] = rows;
    if (opt.pretty) {
        std::cout << "kind  a  b  length  ok\n";
        for (const auto& row : j["results"])
            std::cout << row["kind"].get<std::string>() << "    " << row["a"] << "  " << row["b"]
                      << "  " << row["length"] << "       " << (row["ok"].get<bool>() ? "yes" : "NO")
                      << "\n";
        return allOk ? 0 : 1;
    }
    emit(j, false);
    return allOk ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact segment combinatorics, L-factor algebra and distinction classifiers"};
    app.require_subcommand(1);
    Options opt;

    auto* distinguish = app.add_subcommand("distinguish", "classify an expression");
    distinguish->add_option("--expr", opt.expr, "expression to classify")->required();
    distinguish->add_option("--registry", opt.registryPath, "cuspidal registry JSON")->required();
    distinguish->add_flag("--pretty", opt.pretty, "aligned text output");

    auto* cosets = app.add_subcommand("cosets", "enumerate double-coset matrices");
    cosets->add_option("--mbar", opt.mbar, "row sums, e.g. 1,1,2")->required();
    cosets->add_flag("--pretty", opt.pretty);

    auto* contrib = app.add_subcommand("contrib", "contributing cosets of a standard module");
    contrib->add_option("--sigma", opt.sigma, "product of segments")->required();
    contrib->add_option("--registry", opt.registryPath)->required();
    contrib->add_flag("--pretty", opt.pretty);

    auto* jacquet = app.add_subcommand("jacquet", "jacquet factors of a discrete series");
    jacquet->add_option("--expr", opt.expr, "single segment")->required();
    jacquet->add_option("--partition", opt.partition, "realized degree partition")->required();
    jacquet->add_option("--registry", opt.registryPath)->required();
    jacquet->add_flag("--pretty", opt.pretty);

    auto* lfactor = app.add_subcommand("lfactor", "unramified L-factors");
    lfactor->add_option("--asai", opt.asai, "\"<+|->;a,b,...\"");
    lfactor->add_option("--rs", opt.rs, "\"a,b;c,d\"");
    lfactor->add_option("--var", opt.var, "s-variable name (default s)");
    lfactor->add_flag("--pretty", opt.pretty);

    auto* period = app.add_subcommand("period", "spherical open period");
    period->add_option("--sigma", opt.sigma, "blocks a,b|c|d,e")->required();
    period->add_option("--r", opt.r, "expected number of blocks");
    period->add_option("--mode", opt.mode, "closed, recursive or both");
    period->add_flag("--pretty", opt.pretty);

    auto* alpha = app.add_subcommand("alpha", "functional-equation proportionality atoms");
    alpha->add_option("--rho", opt.rho, "split-side cuspidal symbol")->required();
    alpha->add_option("--k", opt.k, "Steinberg length")->required();
    alpha->add_option("--l", opt.l, "transfer depth")->required();
    alpha->add_option("--at", opt.at, "evaluate the pole order at s = <rational>");
    alpha->add_option("--registry", opt.registryPath);
    alpha->add_flag("--pretty", opt.pretty);

    auto* lemmas = app.add_subcommand("verify-lemmas", "check the reduced-word lemmas");
    lemmas->add_option("--max", opt.maxLemma, "largest a and b (default 4)");
    lemmas->add_flag("--pretty", opt.pretty);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*distinguish) return runDistinguish(opt);
        if (*cosets) return runCosets(opt);
        if (*contrib) return runContrib(opt);
        if (*jacquet) return runJacquet(opt);
        if (*lfactor) return runLfactor(opt);
        if (*period) return runPeriod(opt);
        if (*alpha) return runAlpha(opt);
        if (*lemmas) return runVerifyLemmas(opt);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
