#ifndef HOOKLAB_CLI_HPP
#define HOOKLAB_CLI_HPP

#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hooklab/elliptic.hpp>
#include <hooklab/identities.hpp>
#include <hooklab/littlewood.hpp>
#include <hooklab/partition.hpp>

namespace hooklab
{

namespace cli_detail
{

using nlohmann::json;

inline json partition_json(const Partition &p)
{
    return p.part_vector();
}

inline Partition partition_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected a JSON array of parts");
    }
    return Partition(j.get<std::vector<int>>());
}

inline json decompose(const std::string &mode, int r, const std::string &input, bool invert)
{
    if (r < 1) {
        throw std::invalid_argument("r must be positive");
    }
    if (mode == "phi") {
        if (invert) {
            const auto j = json::parse(input);
            CoreQuotient cq;
            cq.core = partition_from_json(j.at("core"));
            for (const auto &nu : j.at("quotient")) {
                cq.quotient.push_back(partition_from_json(nu));
            }
            return {{"partition", partition_json(phi_inverse(cq, r))}};
        }
        const auto cq = phi(Partition::parse(input), r);
        json quotient = json::array();
        for (const auto &nu : cq.quotient) {
            quotient.push_back(partition_json(nu));
        }
        return {{"core", partition_json(cq.core)}, {"quotient", quotient}};
    }
    if (mode == "psi") {
        if (invert) {
            const auto j = json::parse(input);
            const KernelPair kp{partition_from_json(j.at("kernel")), partition_from_json(j.at("cofactor"))};
            return {{"partition", partition_json(psi_inverse(kp, r))}};
        }
        const auto kp = psi(Partition::parse(input), r);
        return {{"kernel", partition_json(kp.kernel)}, {"cofactor", partition_json(kp.cofactor)}};
    }
    throw std::invalid_argument("mode must be phi or psi");
}

inline std::string pad(const std::string &s, std::size_t w)
{
    return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

inline std::string report_text(const IdentityReport &rep)
{
    std::ostringstream os;
    os << rep.id << "  " << status_name(rep.status) << "  " << rep.elapsed_ms << " ms";
    if (rep.status != Status::ERROR) {
        os << "  checks " << rep.checks << "  terms " << rep.lhs_terms << "/" << rep.rhs_terms;
    }
    os << "\n  params " << rep.params.dump() << "\n";
    if (rep.status == Status::FAIL) {
        os << "  failed check: " << rep.failed_check << "\n  first mismatch: " << rep.first_mismatch.dump() << "\n";
    }
    if (rep.status == Status::ERROR) {
        os << "  error: " << rep.error << "\n";
    }
    return os.str();
}

} // namespace cli_detail

// Runs the command line; all output goes to out/err, written once at the end.
inline int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    using cli_detail::json;
    CLI::App app{"hooklab: partition hook statistics and truncated series identities"};
    app.require_subcommand(1);
    app.allow_extras(false);

    std::string mode = "phi", part, cap_text, core_text, rho_text, id;
    int r = 2, alpha = 2, beta = 1, max_size = 10, p_cap = 2, points = 3;
    bool bottom = false, invert = false, as_json = false;
    std::uint64_t seed = 0;
    std::vector<std::string> caps;

    auto *dec = app.add_subcommand("decompose", "Littlewood (phi) or kernel/cofactor (psi) decomposition");
    dec->add_option("--mode", mode, "phi or psi")->check(CLI::IsMember({"phi", "psi"}));
    dec->add_option("-r", r, "modulus")->required();
    dec->add_flag("--invert", invert, "read a decomposition as JSON and rebuild the partition");
    dec->add_option("partition", part, "partition such as 5,4,4,1 (or JSON with --invert)")->required();

    auto *hk = app.add_subcommand("hooks", "hook lengths divisible by r");
    hk->add_option("-r", r, "modulus")->required();
    hk->add_flag("--bottom", bottom, "bottom squares only");
    hk->add_option("partition", part)->required();

    auto *bf = app.add_subcommand("bf", "BF_{a,b} squares and statistic");
    bf->add_option("-a", alpha)->required();
    bf->add_option("-b", beta)->required();
    bf->add_option("partition", part)->required();

    auto *co = app.add_subcommand("cores", "list r-cores");
    co->add_option("-r", r)->required();
    co->add_option("--max-size", max_size)->required();

    auto *ls = app.add_subcommand("list", "identity registry");
    ls->add_flag("--json", as_json);

    auto *ve = app.add_subcommand("verify", "verify an identity in truncated series");
    ve->add_option("id", id)->required();
    auto *r_opt = ve->add_option("--r,-r", r);
    auto *core_opt = ve->add_option("--core", core_text);
    auto *a_opt = ve->add_option("--alpha,-a", alpha);
    auto *b_opt = ve->add_option("--beta,-b", beta);
    auto *rho_opt = ve->add_option("--rho", rho_text);
    ve->add_option("--cap", caps, "VAR=N, repeatable");
    ve->add_option("--seed", seed);
    auto *pts_opt = ve->add_option("--points", points);
    ve->add_flag("--json", as_json);

    auto *ct = app.add_subcommand("ctable", "rows of the C(m,l,n1,n2) table");
    ct->add_option("--p-cap", p_cap)->required();
    ct->add_flag("--json", as_json);

    std::ostringstream buf;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (*dec) {
            buf << cli_detail::decompose(mode, r, part, invert).dump() << "\n";
        } else if (*hk) {
            const auto lam = Partition::parse(part);
            const auto ms = bottom ? bottom_hooks_mod(lam, r) : hook_multiset_mod(lam, r);
            buf << json{{"r", r}, {"bottom", bottom}, {"hooks", ms.values()}}.dump() << "\n";
        } else if (*bf) {
            const auto lam = Partition::parse(part);
            json squares = json::array();
            for (const auto &s : bf_set(lam, alpha, beta)) {
                squares.push_back({s.row, s.col});
            }
            buf << json{{"squares", squares}, {"statistic", squares.size()}}.dump() << "\n";
        } else if (*co) {
            if (r < 1 || max_size < 0) {
                throw std::invalid_argument("need r >= 1 and max-size >= 0");
            }
            json cores = json::array();
            for (const auto &c : enumerate_r_cores(r, max_size)) {
                cores.push_back(cli_detail::partition_json(c));
            }
            buf << json{{"r", r}, {"cores", cores}}.dump() << "\n";
        } else if (*ls) {
            if (as_json) {
                json arr = json::array();
                for (const auto &d : registry()) {
                    arr.push_back({{"id", d.id},
                                   {"title", d.title},
                                   {"conjecture", d.conjecture},
                                   {"params", d.params},
                                   {"caps", d.caps},
                                   {"r", d.r}});
                }
                buf << arr.dump(2) << "\n";
            } else {
                for (const auto &d : registry()) {
                    std::string caps_s;
                    for (const auto &[v, c] : d.caps) {
                        caps_s += (caps_s.empty() ? "" : ",") + v + ":" + std::to_string(c);
                    }
                    buf << cli_detail::pad(d.id, 24) << cli_detail::pad(d.conjecture ? "conjecture" : "theorem", 12)
                        << cli_detail::pad(caps_s, 28) << d.title << "\n";
                }
            }
        } else if (*ve) {
            VerificationConfig cfg;
            cfg.id = id;
            if (r_opt->count()) {
                cfg.r = r;
            }
            if (core_opt->count()) {
                cfg.core = Partition::parse(core_text);
            }
            if (a_opt->count()) {
                cfg.alpha = alpha;
            }
            if (b_opt->count()) {
                cfg.beta = beta;
            }
            if (rho_opt->count()) {
                cfg.rho = rho_from_name(rho_text);
                if (!cfg.rho) {
                    throw std::invalid_argument("unknown weight kind " + rho_text);
                }
            }
            if (pts_opt->count()) {
                cfg.points = points;
            }
            for (const auto &c : caps) {
                const auto eq = c.find('=');
                if (eq == std::string::npos || eq == 0) {
                    throw std::invalid_argument("cap must look like VAR=N: " + c);
                }
                std::size_t used = 0;
                const int v = std::stoi(c.substr(eq + 1), &used);
                if (used != c.size() - eq - 1) {
                    throw std::invalid_argument("cap must look like VAR=N: " + c);
                }
                cfg.caps[c.substr(0, eq)] = v;
            }
            cfg.seed = seed;
            const auto rep = verify(cfg);
            if (rep.status == Status::ERROR) {
                err << "error: " << rep.error << "\n";
            }
            if (as_json) {
                out << rep.to_json().dump() << "\n";
            } else {
                out << cli_detail::report_text(rep);
            }
            return rep.exit_code();
        } else if (*ct) {
            const auto table = c_table(p_cap);
            json rows = json::array();
            for (const auto &[k, c] : table.entries()) {
                rows.push_back({{"m", k[0]}, {"l", k[1]}, {"n1", k[2]}, {"n2", k[3]}, {"c", c}});
            }
            if (as_json) {
                buf << rows.dump() << "\n";
            } else {
                buf << "   m    l   n1   n2      C\n";
                for (const auto &row : rows) {
                    for (const char *key : {"m", "l", "n1", "n2"}) {
                        buf << std::setw(4) << row[key].get<int>() << ' ';
                    }
                    buf << std::setw(6) << row["c"].get<long>() << "\n";
                }
            }
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    out << buf.str();
    return 0;
}

} // namespace hooklab

#endif
