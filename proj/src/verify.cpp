#include "chv/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace chv {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Selection {
    std::vector<const Identity*> identities;  // catalog order
    bool all = false;
};

Selection resolve_selection(const RunConfig& config) {
    Selection sel;
    if (config.identities.empty()) {
        sel.all = true;
    }
    std::vector<std::string> named;
    for (const std::string& id : config.identities) {
        if (id == "all") {
            sel.all = true;
        } else if (find_identity(id) == nullptr) {
            throw std::invalid_argument("unknown identity id '" + id + "'");
        } else {
            named.push_back(id);
        }
    }
    for (const Identity& ident : registry()) {
        const bool wanted =
            sel.all || std::find(named.begin(), named.end(), ident.id) != named.end();
        if (wanted) sel.identities.push_back(&ident);
    }
    return sel;
}

bool selected(const Selection& sel, std::string_view id) {
    return std::any_of(sel.identities.begin(), sel.identities.end(),
                       [&](const Identity* i) { return i->id == id; });
}

// One stream of records sharing a record id, swept in (n, p, q) order.
struct Job {
    std::string record_id;
    bool uses_pq = true;
    std::function<VerificationRecord(const IdentityParams&)> evaluate;
};

VerificationRecord make_skip(std::string id, const IdentityParams& v) {
    VerificationRecord rec;
    rec.id = std::move(id);
    rec.n = v.n;
    rec.p = v.p;
    rec.q = v.q;
    rec.status = RecordStatus::Skip;
    return rec;
}

VerificationRecord make_compare(std::string id, const IdentityParams& v,
                                const Rational& lhs, const Rational& rhs,
                                CaseTag tag) {
    VerificationRecord rec;
    rec.id = std::move(id);
    rec.n = v.n;
    rec.p = v.p;
    rec.q = v.q;
    rec.tag = tag;
    rec.status = lhs == rhs ? RecordStatus::Pass : RecordStatus::Mismatch;
    rec.lhs = lhs.str();
    rec.rhs = rhs.str();
    return rec;
}

std::vector<Job> plan_jobs(const RunConfig& config, const Selection& sel) {
    std::vector<Job> jobs;

    if (config.checks.count(CheckKind::Equality) != 0) {
        for (const Identity* ident : sel.identities) {
            const bool corrupt = ident->id == config.corrupt_id;
            jobs.push_back(Job{
                ident->id, ident->uses_pq,
                [ident, corrupt](const IdentityParams& v) {
                    if (!ident->in_domain(v)) return make_skip(ident->id, v);
                    const Evaluation lhs = ident->lhs(v);
                    Evaluation rhs = ident->rhs(v);
                    if (corrupt) rhs.value += 1;
                    return make_compare(ident->id, v, lhs.value, rhs.value,
                                        rhs.tag);
                }});
        }
    }

    if (config.checks.count(CheckKind::Derivation) != 0) {
        static constexpr std::pair<JetOp, const char*> kOps[] = {
            {JetOp::Value, "value"},
            {JetOp::Dx, "dx"},
            {JetOp::Dy, "dy"},
            {JetOp::Dxy, "dxy"},
        };
        for (const Seed seed : {Seed::Eq2, Seed::Eq5, Seed::Eq7}) {
            if (!selected(sel, seed_name(seed))) continue;
            for (const auto& [op, op_name] : kOps) {
                std::string id = std::string(seed_name(seed)) + "@" + op_name;
                jobs.push_back(Job{
                    id, true,
                    [seed, op, id](const IdentityParams& v) {
                        const auto [lhs, rhs] = jet_derive(seed, op, v);
                        return make_compare(id, v, lhs, rhs, CaseTag::None);
                    }});
            }
        }
    }

    if (config.checks.count(CheckKind::Shift) != 0) {
        for (const ShiftRelation& rel : shift_relations()) {
            if (!selected(sel, rel.target)) continue;
            const Identity* target = find_identity(rel.target);
            const Identity* source = find_identity(rel.source);
            for (const bool rhs_side : {false, true}) {
                std::string id = std::string(rel.target) + "@shift-" +
                                 (rhs_side ? "rhs" : "lhs");
                jobs.push_back(Job{
                    id, true,
                    [&rel, target, source, rhs_side, id](const IdentityParams& v) {
                        if (v.n < 1) return make_skip(id, v);  // shift needs n-1 >= 0
                        const IdentityParams shifted = rel.shifted(v);
                        auto eval = rhs_side ? source->rhs : source->lhs;
                        auto tgt = rhs_side ? target->rhs : target->lhs;
                        const Rational reconstructed =
                            rel.factor(v) * eval(shifted).value;
                        return make_compare(id, v, tgt(v).value, reconstructed,
                                            CaseTag::None);
                    }});
            }
        }
    }

    std::sort(jobs.begin(), jobs.end(),
              [](const Job& a, const Job& b) { return a.record_id < b.record_id; });
    return jobs;
}

void tally(const VerificationRecord& rec, RunSummary& summary) {
    ++summary.total;
    switch (rec.status) {
        case RecordStatus::Pass: ++summary.passed; break;
        case RecordStatus::Skip: ++summary.skipped; break;
        case RecordStatus::Mismatch: ++summary.mismatched; break;
    }
}

}  // namespace

std::string_view to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::Equality: return "equality";
        case CheckKind::Derivation: return "derivation";
        case CheckKind::Shift: return "shift";
    }
    return "";
}

std::string_view to_string(RecordStatus status) {
    switch (status) {
        case RecordStatus::Pass: return "PASS";
        case RecordStatus::Skip: return "SKIP";
        case RecordStatus::Mismatch: return "MISMATCH";
    }
    return "";
}

CheckKind check_kind_from_name(std::string_view name) {
    if (name == "equality") return CheckKind::Equality;
    if (name == "derivation") return CheckKind::Derivation;
    if (name == "shift") return CheckKind::Shift;
    throw std::invalid_argument(
        "unknown check '" + std::string(name) +
        "' (expected equality, derivation or shift)");
}

OutputFormat output_format_from_name(std::string_view name) {
    if (name == "json-lines") return OutputFormat::JsonLines;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "table") return OutputFormat::Table;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected json-lines, csv or table)");
}

RunSummary run_verification(const RunConfig& config,
                            std::vector<VerificationRecord>& records) {
    if (config.n_max < 0 || config.p_max < 0 || config.q_max < 0) {
        throw std::invalid_argument("grid bounds must be nonnegative");
    }
    if (!config.corrupt_id.empty() &&
        find_identity(config.corrupt_id) == nullptr) {
        throw std::invalid_argument("unknown identity id '" +
                                    config.corrupt_id + "' (--corrupt)");
    }
    const Selection sel = resolve_selection(config);
    const std::vector<Job> jobs = plan_jobs(config, sel);

    RunSummary summary;
    for (const Job& job : jobs) {
        const long p_max = job.uses_pq ? config.p_max : 0;
        const long q_max = job.uses_pq ? config.q_max : 0;
        for (long n = 0; n <= config.n_max; ++n) {
            for (long p = 0; p <= p_max; ++p) {
                for (long q = 0; q <= q_max; ++q) {
                    VerificationRecord rec = job.evaluate({n, p, q});
                    tally(rec, summary);
                    const bool stop = config.fail_fast &&
                                      rec.status == RecordStatus::Mismatch;
                    records.push_back(std::move(rec));
                    if (stop) return summary;
                }
            }
        }
    }
    return summary;
}

std::string to_json_line(const VerificationRecord& record) {
    ordered_json j;
    j["id"] = record.id;
    j["n"] = record.n;
    j["p"] = record.p;
    j["q"] = record.q;
    if (record.tag == CaseTag::None) {
        j["case"] = nullptr;
    } else {
        j["case"] = std::string(to_string(record.tag));
    }
    j["status"] = std::string(to_string(record.status));
    if (record.status == RecordStatus::Skip) {
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
    } else {
        j["lhs"] = record.lhs;
        j["rhs"] = record.rhs;
    }
    return j.dump();
}

VerificationRecord record_from_json_line(const std::string& line) {
    ordered_json j;
    try {
        j = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad record line: ") + e.what());
    }
    VerificationRecord rec;
    rec.id = j.at("id").get<std::string>();
    rec.n = j.at("n").get<long>();
    rec.p = j.at("p").get<long>();
    rec.q = j.at("q").get<long>();
    const auto& tag = j.at("case");
    rec.tag = tag.is_null() ? CaseTag::None
                            : case_tag_from_string(tag.get<std::string>());
    const std::string status = j.at("status").get<std::string>();
    if (status == "PASS") {
        rec.status = RecordStatus::Pass;
    } else if (status == "SKIP") {
        rec.status = RecordStatus::Skip;
    } else if (status == "MISMATCH") {
        rec.status = RecordStatus::Mismatch;
    } else {
        throw std::invalid_argument("bad record status '" + status + "'");
    }
    if (!j.at("lhs").is_null()) rec.lhs = j.at("lhs").get<std::string>();
    if (!j.at("rhs").is_null()) rec.rhs = j.at("rhs").get<std::string>();
    return rec;
}

const char* const kCsvHeader = "id,n,p,q,case,status,lhs,rhs";

std::string to_csv_line(const VerificationRecord& record) {
    // Every field is comma-free by construction (ids, integers, case tags,
    // canonical fraction strings), so no quoting is needed.
    std::string line;
    line += record.id;
    line += ',';
    line += std::to_string(record.n);
    line += ',';
    line += std::to_string(record.p);
    line += ',';
    line += std::to_string(record.q);
    line += ',';
    line += to_string(record.tag);
    line += ',';
    line += to_string(record.status);
    line += ',';
    line += record.lhs;
    line += ',';
    line += record.rhs;
    return line;
}

void write_records(std::ostream& os, OutputFormat format,
                   const std::vector<VerificationRecord>& records,
                   const RunSummary& summary) {
    switch (format) {
        case OutputFormat::JsonLines:
            for (const VerificationRecord& rec : records) {
                os << to_json_line(rec) << '\n';
            }
            return;
        case OutputFormat::Csv:
            os << kCsvHeader << '\n';
            for (const VerificationRecord& rec : records) {
                os << to_csv_line(rec) << '\n';
            }
            return;
        case OutputFormat::Table: {
            std::size_t id_width = 2;
            std::size_t side_width = 3;
            for (const VerificationRecord& rec : records) {
                id_width = std::max(id_width, rec.id.size());
                side_width = std::max({side_width, rec.lhs.size(), rec.rhs.size()});
            }
            for (const VerificationRecord& rec : records) {
                os << rec.id;
                os << std::string(id_width - rec.id.size() + 2, ' ');
                os << "n=" << rec.n << " p=" << rec.p << " q=" << rec.q << "  ";
                const std::string_view tag = to_string(rec.tag);
                os << (tag.empty() ? std::string_view("-") : tag) << "  ";
                os << to_string(rec.status);
                if (rec.status != RecordStatus::Skip) {
                    os << "  lhs=" << rec.lhs << "  rhs=" << rec.rhs;
                }
                os << '\n';
            }
            os << "total " << summary.total << "  pass " << summary.passed
               << "  skip " << summary.skipped << "  mismatch "
               << summary.mismatched << '\n';
            return;
        }
    }
}

}  // namespace chv
