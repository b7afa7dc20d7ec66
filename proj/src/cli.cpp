#include "fusionobs/cli.hpp"

#include "fusionobs/hochschild.hpp"
#include "fusionobs/obstruction.hpp"
#include "fusionobs/pentagon.hpp"
#include "fusionobs/ring_json.hpp"

#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace fusionobs::cli {

namespace {

using io::Json;

class CommandError : public std::runtime_error {
public:
    CommandError(int code, const std::string& message) : std::runtime_error(message), code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

std::string read_input(const RunConfig& config) {
    if (config.inputs.empty()) throw CommandError(kParseError, "no --input given");
    const auto& path = config.inputs.front();
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError(kParseError, "cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FusionRing load_ring(const RunConfig& config) {
    try {
        return io::ring_from_json(io::parse_document(read_input(config)));
    } catch (const io::ParseError& e) {
        throw CommandError(kParseError, e.what());
    } catch (const InvalidRing& e) {
        throw CommandError(kInvalidRing, e.what());
    }
}

// Evaluates fn(0..count-1) on up to `jobs` threads; results keep index order.
template <typename Fn>
auto parallel_map(std::size_t count, std::size_t jobs, Fn fn) {
    using Result = decltype(fn(std::size_t{0}));
    std::vector<std::optional<Result>> results(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                results[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min(jobs, count));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<Result> out;
    out.reserve(count);
    for (auto& r : results) out.push_back(std::move(*r));
    return out;
}

const char* kind_name(Violation::Kind kind) {
    switch (kind) {
        case Violation::Kind::Shape: return "shape";
        case Violation::Kind::Name: return "name";
        case Violation::Kind::NegativeEntry: return "negative_entry";
        case Violation::Kind::Associativity: return "associativity";
        case Violation::Kind::Identity: return "identity";
        case Violation::Kind::Intertwining: return "intertwining";
    }
    return "unknown";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int cmd_validate(const RunConfig& config, std::ostream& out) {
    RawRing raw;
    try {
        raw = io::raw_ring_from_json(io::parse_document(read_input(config)));
    } catch (const io::ParseError& e) {
        throw CommandError(kParseError, e.what());
    }
    const auto report = validate_fusion_ring(raw);
    if (config.format.value_or(Format::Json) == Format::Csv) {
        out << "kind,message\n";
        for (const auto& v : report.violations) out << kind_name(v.kind) << ',' << csv_field(v.describe()) << '\n';
    } else {
        Json doc;
        doc["valid"] = report.ok();
        doc["rank"] = raw.rank();
        Json list = Json::array();
        for (const auto& v : report.violations) {
            Json item;
            item["kind"] = kind_name(v.kind);
            item["where"] = v.where;
            item["lhs"] = v.lhs;
            item["rhs"] = v.rhs;
            item["message"] = v.describe();
            list.push_back(std::move(item));
        }
        doc["violations"] = std::move(list);
        out << doc.dump(2) << '\n';
    }
    return report.ok() ? kOk : kInvalidRing;
}

struct ObstructionOutcome {
    obstruction::ObstructionCocycle cocycle;
    bool is_cocycle = false;
    hochschild::CoboundaryDecision decision;
};

ObstructionOutcome analyze(const FusionRing& ring, bool verify_oracle) {
    ObstructionOutcome o{obstruction::first_obstruction(ring, verify_oracle ? obstruction::Verification::WithOracle
                                                                            : obstruction::Verification::ClosedOnly),
                         false, {}};
    o.is_cocycle = hochschild::coboundary(o.cocycle.alpha).is_zero();
    if (o.is_cocycle) o.decision = hochschild::is_coboundary(o.cocycle.alpha);
    return o;
}

Json mismatches_json(const FusionRing& ring, const std::vector<obstruction::OracleMismatch>& mismatches) {
    Json list = Json::array();
    for (const auto& m : mismatches) {
        Json item;
        std::vector<std::string> names;
        for (auto e : m.inputs) names.push_back(ring.name(e));
        item["inputs"] = names;
        item["output"] = ring.name(m.output);
        item["closed"] = m.closed;
        item["bruteforce"] = m.bruteforce;
        list.push_back(std::move(item));
    }
    return list;
}

int cmd_obstruction(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto ring = load_ring(config);
    if (ring.rank() > hochschild::kMaxCohomologyRank)
        throw CommandError(kBoundsExceeded, "obstruction: rank " + std::to_string(ring.rank()) + " exceeds the solver bound " +
                                                std::to_string(hochschild::kMaxCohomologyRank));
    const auto o = analyze(ring, config.verify_oracle);
    if (!o.is_cocycle) err << "obstruction: alpha is not a cocycle\n";
    if (!o.cocycle.mismatches.empty())
        err << "obstruction: " << o.cocycle.mismatches.size() << " closed/oracle mismatches\n";
    if (config.format.value_or(Format::Json) == Format::Csv) {
        out << "x1,x2,x3,x4,x,alpha\n";
        const auto& a = o.cocycle.alpha;
        for (std::size_t t = 0; t < a.tuples(); ++t) {
            const auto tuple = a.tuple_at(t);
            for (Element x = 0; x < ring.rank(); ++x) {
                for (auto e : tuple) out << csv_field(ring.name(e)) << ',';
                out << csv_field(ring.name(x)) << ',' << (a.get(tuple, x) ? 1 : 0) << '\n';
            }
        }
    } else {
        auto doc = io::cocycle_report(ring, o.cocycle, o.is_cocycle);
        if (o.cocycle.oracle_checked) doc["oracle_mismatches"] = mismatches_json(ring, o.cocycle.mismatches);
        doc["alpha_trivial"] = o.is_cocycle ? Json(o.decision.trivial) : Json(nullptr);
        doc["witness"] = o.decision.witness ? io::cochain_to_json(*o.decision.witness) : Json(nullptr);
        out << doc.dump(2) << '\n';
    }
    return o.is_cocycle && o.decision.trivial ? kOk : kNegativeVerdict;
}

int cmd_hochschild(const RunConfig& config, std::ostream& out) {
    const auto ring = load_ring(config);
    std::size_t dim = 0;
    try {
        dim = hochschild::cohomology_dim(ring, config.degree);
    } catch (const hochschild::SolverBoundsExceeded& e) {
        throw CommandError(kBoundsExceeded, e.what());
    }
    const auto o = analyze(ring, config.verify_oracle);
    if (!o.is_cocycle) throw CommandError(kNegativeVerdict, "hochschild: alpha is not a cocycle");
    if (config.format.value_or(Format::Json) == Format::Csv) {
        out << "degree,dim,alpha_trivial\n" << config.degree << ',' << dim << ',' << (o.decision.trivial ? "true" : "false") << '\n';
    } else {
        out << io::cohomology_report(ring, config.degree, dim, o.decision.trivial, o.decision.witness).dump(2) << '\n';
    }
    return kOk;
}

struct ClassifyRow {
    std::int64_t m, n;
    int alpha_x, alpha_e;
    hochschild::ClassVerdict congruence, solver;
};

int cmd_classify_rank2(const RunConfig& config, std::ostream& out) {
    for (auto bound : {config.max_m, config.max_n})
        if (bound < 0 || bound > kMaxClassifyRange)
            throw CommandError(kBoundsExceeded, "classify-rank2: ranges must lie in 0.." + std::to_string(kMaxClassifyRange));
    const std::size_t cols = static_cast<std::size_t>(config.max_n + 1);
    const std::size_t cells = static_cast<std::size_t>(config.max_m + 1) * cols;
    const auto rows = parallel_map(cells, config.jobs, [&](std::size_t i) {
        const auto m = static_cast<std::int64_t>(i / cols), n = static_cast<std::int64_t>(i % cols);
        const auto ring = FusionRing::rank_two(m, n);
        const auto o = analyze(ring, config.verify_oracle);
        if (!o.is_cocycle) throw CommandError(kNegativeVerdict, "classify-rank2: alpha is not a cocycle");
        const std::array<Element, 4> xxxx{1, 1, 1, 1};
        return ClassifyRow{m,
                           n,
                           o.cocycle.alpha.get(xxxx, 1) ? 1 : 0,
                           o.cocycle.alpha.get(xxxx, 0) ? 1 : 0,
                           hochschild::classify_rank2(m, n),
                           o.decision.trivial ? hochschild::ClassVerdict::Trivial : hochschild::ClassVerdict::Nontrivial};
    });
    bool all_agree = true;
    if (config.format.value_or(Format::Csv) == Format::Csv) {
        out << "m,n,alpha_x,alpha_e,congruence_verdict,generic_solver_verdict,agree\n";
        for (const auto& r : rows) {
            const bool agree = r.congruence == r.solver;
            all_agree = all_agree && agree;
            out << r.m << ',' << r.n << ',' << r.alpha_x << ',' << r.alpha_e << ',' << to_string(r.congruence) << ','
                << to_string(r.solver) << ',' << (agree ? "true" : "false") << '\n';
        }
    } else {
        Json list = Json::array();
        for (const auto& r : rows) {
            const bool agree = r.congruence == r.solver;
            all_agree = all_agree && agree;
            Json item;
            item["m"] = r.m;
            item["n"] = r.n;
            item["alpha_x"] = r.alpha_x;
            item["alpha_e"] = r.alpha_e;
            item["congruence_verdict"] = to_string(r.congruence);
            item["generic_solver_verdict"] = to_string(r.solver);
            item["agree"] = agree;
            list.push_back(std::move(item));
        }
        out << list.dump(2) << '\n';
    }
    return all_agree ? kOk : kNegativeVerdict;
}

struct EnumerateRow {
    std::optional<Element> identity;
    hochschild::ClassVerdict verdict;
    bool oracle_agree;
};

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
    if (config.rank < 1 || config.rank > kMaxEnumerationRank || config.max_entry < 0 ||
        config.max_entry > kMaxEnumerationEntry)
        throw CommandError(kBoundsExceeded, "enumerate: need 1 <= rank <= " + std::to_string(kMaxEnumerationRank) +
                                                " and 0 <= max-entry <= " + std::to_string(kMaxEnumerationEntry));
    const auto rings = enumerate_fusion_rings(config.rank, config.max_entry, config.identity);
    const auto rows = parallel_map(rings.size(), config.jobs, [&](std::size_t i) {
        const auto& ring = rings[i];
        const auto o = analyze(ring, config.verify_oracle);
        if (!o.is_cocycle) throw CommandError(kNegativeVerdict, "enumerate: alpha is not a cocycle");
        return EnumerateRow{find_identity(ring),
                            o.decision.trivial ? hochschild::ClassVerdict::Trivial : hochschild::ClassVerdict::Nontrivial,
                            o.cocycle.mismatches.empty()};
    });
    const bool csv = config.format.value_or(Format::Json) == Format::Csv;
    if (csv) out << "index,table,identity,valid,verdict,oracle_checked,oracle_agree\n";
    for (std::size_t i = 0; i < rings.size(); ++i) {
        const auto& ring = rings[i];
        const auto& row = rows[i];
        const std::string identity = row.identity ? ring.name(*row.identity) : "";
        if (csv) {
            std::string table;
            for (auto v : ring.flat_table()) table += (table.empty() ? "" : " ") + std::to_string(v);
            out << i << ',' << table << ',' << identity << ",true," << to_string(row.verdict) << ','
                << (config.verify_oracle ? "true" : "false") << ',' << (row.oracle_agree ? "true" : "false") << '\n';
        } else {
            Json item;
            item["index"] = i;
            item["ring"] = io::ring_to_json(ring);
            item["identity"] = row.identity ? Json(identity) : Json(nullptr);
            item["valid"] = true;
            item["verdict"] = to_string(row.verdict);
            item["oracle_checked"] = config.verify_oracle;
            item["oracle_agree"] = row.oracle_agree;
            out << item.dump() << '\n';
        }
    }
    return kOk;
}

int cmd_pentagon(const RunConfig& config, std::ostream& out) {
    const bool csv = config.format.value_or(Format::Json) == Format::Csv;
    if (config.ne_case) {
        if (*config.ne_case < 1) throw CommandError(kParseError, "pentagon: --ne-case needs n >= 1");
        const auto n = static_cast<std::size_t>(*config.ne_case);
        const auto rank = pentagon::operator_schmidt_rank(pentagon::swap_operator(n), n);
        const bool solvable = pentagon::ne_case_solvable(n);
        if (csv) {
            out << "n,swap_schmidt_rank,solvable\n" << n << ',' << rank << ',' << (solvable ? "true" : "false") << '\n';
        } else {
            Json doc;
            doc["ne_case"] = n;
            doc["swap_schmidt_rank"] = rank;
            doc["solvable"] = solvable;
            out << doc.dump(2) << '\n';
        }
        return solvable ? kOk : kNegativeVerdict;
    }
    std::string kind;
    std::optional<pentagon::ExactMatrix> phi;
    try {
        const auto doc = io::parse_document(read_input(config));
        if (doc.is_object()) {
            kind = "group";
            phi = pentagon::group_unitary(io::group_from_json(doc));
        } else {
            kind = "matrix";
            phi = io::matrix_from_json(doc);
        }
    } catch (const io::ParseError& e) {
        throw CommandError(kParseError, e.what());
    } catch (const pentagon::PentagonShapeError& e) {
        throw CommandError(kParseError, e.what());
    }
    bool holds = false;
    try {
        holds = pentagon::check_pentagon(*phi);
    } catch (const pentagon::PentagonShapeError& e) {
        throw CommandError(kParseError, e.what());
    }
    if (csv) {
        out << "kind,dimension,pentagon_holds\n" << kind << ',' << phi->dim() << ',' << (holds ? "true" : "false") << '\n';
    } else {
        Json doc;
        doc["kind"] = kind;
        doc["dimension"] = phi->dim();
        doc["pentagon_holds"] = holds;
        out << doc.dump(2) << '\n';
    }
    return holds ? kOk : kNegativeVerdict;
}

int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto& c = config.command;
    if (c == "validate") return cmd_validate(config, out);
    if (c == "obstruction") return cmd_obstruction(config, out, err);
    if (c == "classify-rank2") return cmd_classify_rank2(config, out);
    if (c == "enumerate") return cmd_enumerate(config, out);
    if (c == "hochschild") return cmd_hochschild(config, out);
    if (c == "pentagon") return cmd_pentagon(config, out);
    throw CommandError(kParseError, "unknown command \"" + c + "\"");
}

} // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"validate",   "obstruction", "classify-rank2",
                                                "enumerate",  "hochschild",  "pentagon"};
    return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    int code = kOk;
    try {
        code = dispatch(config, buffer, err);
    } catch (const CommandError& e) {
        err << config.command << ": " << e.what() << '\n';
        return e.code();
    } catch (const hochschild::SolverBoundsExceeded& e) {
        err << config.command << ": " << e.what() << '\n';
        return kBoundsExceeded;
    }
    if (config.output) {
        std::ofstream file(*config.output, std::ios::binary);
        if (!file) {
            err << config.command << ": cannot write " << *config.output << '\n';
            return kParseError;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return code;
}

} // namespace fusionobs::cli
