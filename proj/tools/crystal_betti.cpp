#include <cstdlib>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <crystal/crystal.hpp>

namespace {

int default_jobs() {
    if (const char* env = std::getenv("CRYSTAL_BETTI_JOBS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
        std::cerr << "ignoring CRYSTAL_BETTI_JOBS=" << env << " (want a positive integer)\n";
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

struct Options {
    std::string crystal, olattice, file;
    int64_t characteristic = 0;
    bool json = false;
    bool multigraded = false;
    bool no_timing = false;
    bool unsafe_caps = false;
    int jobs = 1;
    std::string compare;

    int theorem = 0, corollary = 0, lemma = 0;
    bool identities = false;
    int variant = 1;
    int n1 = 0, n2 = 0, n = 0;
    std::vector<int> ns;

    std::string family;
    int max_n1 = 4, max_n2 = 4, max_vars = 12, max_n = 6;
};

crystal::FieldSpec field_of(const Options& o) {
    return o.characteristic == 0 ? crystal::FieldSpec::rationals()
                                 : crystal::FieldSpec::prime(static_cast<uint32_t>(o.characteristic));
}

crystal::RunLimits limits_of(const Options& o) {
    crystal::RunLimits lim;
    if (o.unsafe_caps) {
        lim.max_vars = 24;
        lim.max_faces = size_t{1} << 24;
    }
    lim.jobs = o.jobs;
    return lim;
}

crystal::FiniteLattice build_instance(const Options& o) {
    if (!o.crystal.empty()) return crystal::build_crystal(crystal::parse_crystal_spec(o.crystal));
    if (!o.olattice.empty()) return crystal::build_o_lattice(crystal::parse_o_spec(o.olattice));
    return crystal::load_lattice_file(o.file);
}

void add_instance_flags(CLI::App* cmd, Options& o, bool required = true) {
    auto* grp = cmd->add_option_group("instance", "lattice to analyze");
    grp->add_option("--crystal", o.crystal, "crystal lattice spec k:n1,...,nk");
    grp->add_option("--o-lattice", o.olattice, "o-lattice spec k:m1,...,mk/M1,...,Mk");
    grp->add_option("--file", o.file, "lattice description file (json)");
    if (required) grp->require_option(1);
}

void add_common_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--char", o.characteristic, "prime field characteristic (0 = rationals)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd->add_flag("--json", o.json, "emit json instead of text");
    cmd->add_option("--jobs", o.jobs, "worker thread count")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_flag("--unsafe-caps", o.unsafe_caps, "lift the 16-variable / 2^20-face resource caps");
}

int cmd_lattice(const Options& o) {
    crystal::FiniteLattice L = build_instance(o);
    if (o.json) {
        std::cout << crystal::lattice_report_to_json(L).dump(2) << "\n";
        return 0;
    }
    crystal::LatticeLawReport laws = crystal::check_lattice_laws(L);
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "elements: " << L.size() << " (bottom " << L.label(L.bottom()) << ", top " << L.label(L.top())
              << ")\n";
    std::cout << "lattice: " << yn(laws.is_lattice) << "\n";
    std::cout << "modular: " << yn(laws.is_modular) << "\n";
    std::cout << "distributive: " << yn(laws.is_distributive) << "\n";
    std::cout << "incomparable pairs: " << crystal::incomparable_pairs(L).size() << "\n";
    return 0;
}

int cmd_ideal(const Options& o) {
    crystal::FiniteLattice L = build_instance(o);
    crystal::RingContext ctx = crystal::RingContext::for_lattice(L);
    crystal::MonomialOrder order = crystal::crystal_order(ctx);
    std::vector<crystal::Binomial> gens = crystal::join_meet_generators(L, ctx, order);
    if (o.json) {
        nlohmann::json j;
        j["variables"] = ctx.labels;
        j["generators"] = nlohmann::json::array();
        for (const auto& g : gens) j["generators"].push_back(crystal::binomial_to_json(g, ctx.labels));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "join-meet generators: " << gens.size() << "\n";
    for (const auto& g : gens) std::cout << g.str(ctx.labels) << "\n";
    return 0;
}

int cmd_gb(const Options& o) {
    crystal::GroebnerResult g = crystal::analyze_lattice_groebner(build_instance(o), limits_of(o));
    bool equal = true;
    std::optional<crystal::ClaimComparison> cmp;
    std::string which = o.compare;
    if (!which.empty()) {
        crystal::ClaimedSet set = crystal::claimed_set_from_string(which);
        std::vector<crystal::Monomial> claimed;
        if (!o.crystal.empty()) {
            claimed = crystal::claimed_crystal_initial(crystal::parse_crystal_spec(o.crystal), set);
        } else if (!o.olattice.empty()) {
            if (set != crystal::ClaimedSet::section5)
                throw std::invalid_argument("claimed set " + which + " applies to crystal specs only");
            claimed = crystal::claimed_o_initial(crystal::parse_o_spec(o.olattice));
        } else {
            throw std::invalid_argument("claimed-set comparison needs a --crystal or --o-lattice spec");
        }
        cmp = crystal::compare_initial(g.initial, std::move(claimed));
        equal = cmp->equal;
    }

    if (o.json) {
        nlohmann::json j = crystal::gb_to_json(g.gb, g.initial, g.ctx.labels);
        if (cmp) j["comparison"] = crystal::comparison_to_json(*cmp, g.ctx.labels, which);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "reduced groebner basis (" << g.gb.elements.size() << " elements):\n";
        for (const auto& b : g.gb.elements) std::cout << "  " << b.str(g.ctx.labels) << "\n";
        std::cout << "initial ideal (" << g.initial.generators().size() << " generators):\n";
        for (const auto& m : g.initial.generators()) std::cout << "  " << m.str(g.ctx.labels) << "\n";
        if (cmp) {
            std::cout << "claimed = computed: " << (cmp->equal ? "true" : "false") << "\n";
            if (!cmp->missing.empty()) {
                std::cout << "claimed but not computed:\n";
                for (const auto& m : cmp->missing) std::cout << "  " << m.str(g.ctx.labels) << "\n";
            }
            if (!cmp->extra.empty()) {
                std::cout << "computed but not claimed:\n";
                for (const auto& m : cmp->extra) std::cout << "  " << m.str(g.ctx.labels) << "\n";
            }
        }
    }
    return equal ? 0 : 1;
}

int cmd_betti(const Options& o) {
    crystal::PipelineResult p = crystal::analyze_lattice(build_instance(o), field_of(o), limits_of(o));
    if (o.json) {
        std::cout << crystal::betti_to_json(p.betti, p.ctx.labels, o.multigraded).dump(2) << "\n";
        return 0;
    }
    std::cout << crystal::betti_text_table(p.betti);
    if (o.multigraded) {
        std::cout << "multigraded:\n";
        for (const auto& [i, by_deg] : p.betti.multigraded)
            for (const auto& [m, r] : by_deg)
                std::cout << "  beta[" << i << ", " << m.str(p.ctx.labels) << "] = " << r << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o) {
    int chosen = (o.theorem != 0) + (o.corollary != 0) + (o.identities ? 1 : 0) + (o.lemma != 0);
    if (chosen != 1)
        throw std::invalid_argument("pick exactly one of --theorem, --corollary, --identities, --lemma");
    crystal::FieldSpec field = field_of(o);
    crystal::RunLimits lim = limits_of(o);

    crystal::VerificationReport rep;
    if (o.theorem == 1) {
        if (o.n1 < 1 || o.n2 < 1) throw std::invalid_argument("verify --theorem 1 needs --n1 and --n2");
        rep = crystal::check_theorem1(o.n1, o.n2, field, lim);
    } else if (o.theorem == 4) {
        if (o.olattice.empty()) throw std::invalid_argument("verify --theorem 4 needs --o-lattice k:m1,../M1,..");
        crystal::OLatticeSpec spec = crystal::parse_o_spec(o.olattice);
        rep = crystal::check_theorem4(spec.k, spec.ms, spec.Ms, field, lim);
    } else if (o.theorem != 0) {
        throw std::invalid_argument("verify: only --theorem 1 and --theorem 4 exist");
    } else if (o.corollary == 2) {
        if (o.ns.empty()) throw std::invalid_argument("verify --corollary 2 needs --ns n1,n2,...");
        rep = crystal::check_corollary2(static_cast<int>(o.ns.size()), o.ns, field, lim);
    } else if (o.corollary != 0) {
        throw std::invalid_argument("verify: only --corollary 2 exists");
    } else if (o.identities) {
        if (o.n1 < 1) throw std::invalid_argument("verify --identities needs --n1");
        rep = crystal::check_known_identities(o.n1, o.variant, field, lim);
    } else if (o.lemma == 1) {
        if (o.n < 1) throw std::invalid_argument("verify --lemma 1 needs --n");
        rep = crystal::check_lemma1(o.n, field, lim);
    } else {
        throw std::invalid_argument("verify: only --lemma 1 exists");
    }

    if (o.json) std::cout << crystal::report_to_json(rep, !o.no_timing).dump(2) << "\n";
    else std::cout << crystal::report_text(rep);
    return rep.failed() ? 1 : 0;
}

int cmd_sweep(const Options& o) {
    crystal::FieldSpec field = field_of(o);
    crystal::RunLimits lim = limits_of(o);
    crystal::SweepResult s;
    if (o.family == "crystal2") s = crystal::sweep_crystal2(o.max_n1, o.max_n2, field, lim);
    else if (o.family == "o-lattice") s = crystal::sweep_o_lattice(o.max_vars, field, lim);
    else s = crystal::sweep_conjecture(o.max_n, field, lim);

    if (o.json) std::cout << crystal::sweep_to_json(s, !o.no_timing).dump(2) << "\n";
    else std::cout << crystal::sweep_to_csv(s);

    int fails = 0, errors = 0;
    for (const auto& r : s.rows) {
        fails += r.status == "fail";
        errors += r.status == "error";
    }
    if (fails || errors)
        std::cerr << "sweep: " << fails << " failed, " << errors << " errored of " << s.rows.size() << " rows\n";
    if (fails) return 1;
    return errors ? 2 : 0;
}

int cmd_conjecture(const Options& o) {
    std::vector<crystal::VerificationReport> reports =
        crystal::scan_conjecture(o.max_n, field_of(o), limits_of(o));
    if (o.json) {
        nlohmann::json j;
        j["max"] = o.max_n;
        j["rows"] = nlohmann::json::array();
        for (const auto& rep : reports) j["rows"].push_back(crystal::report_to_json(rep, !o.no_timing));
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        bool agree = rep.conditions.at(0).second;
        std::cout << "n1=" << (i + 1) << ": pd = " << rep.pd << ", conjectured " << (i + 1) << " -> "
                  << (agree ? "agree" : "disagree") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    o.jobs = default_jobs();

    CLI::App app{"join-meet ideals of finite lattices: groebner bases, initial ideals, exact Betti tables"};
    app.require_subcommand(1);

    auto* lat = app.add_subcommand("lattice", "build a lattice and report which laws it satisfies");
    add_instance_flags(lat, o);
    lat->add_flag("--json", o.json, "emit json instead of text");

    auto* ideal = app.add_subcommand("ideal", "list the join-meet generators");
    add_instance_flags(ideal, o);
    ideal->add_flag("--json", o.json, "emit json instead of text");

    auto* gb = app.add_subcommand("gb", "reduced groebner basis and initial ideal");
    add_instance_flags(gb, o);
    add_common_flags(gb, o);
    gb->add_option("--compare", o.compare, "compare the initial ideal against a claimed generator set")
        ->check(CLI::IsMember({"section1", "theorem1-proof", "section5"}));

    auto* betti = app.add_subcommand("betti", "Betti table and projective dimension of the initial-ideal quotient");
    add_instance_flags(betti, o);
    add_common_flags(betti, o);
    betti->add_flag("--multigraded", o.multigraded, "include the multigraded table (large)");

    auto* verify = app.add_subcommand("verify", "check one quantitative claim on a computed instance");
    verify->add_option("--theorem", o.theorem, "theorem number (1 or 4)")->check(CLI::IsMember({1, 4}));
    verify->add_option("--corollary", o.corollary, "corollary number (2)")->check(CLI::IsMember({2}));
    verify->add_flag("--identities", o.identities, "check the closed-form totals for two chains");
    verify->add_option("--lemma", o.lemma, "lemma number (1)")->check(CLI::IsMember({1}));
    verify->add_option("--variant", o.variant, "identities variant: fixed n2 (1 or 2)")
        ->check(CLI::IsMember({1, 2}))
        ->capture_default_str();
    verify->add_option("--n1", o.n1, "first chain length");
    verify->add_option("--n2", o.n2, "second chain length");
    verify->add_option("--ns", o.ns, "chain lengths n1,n2,... for --corollary 2")->delimiter(',');
    verify->add_option("--n", o.n, "variable count for --lemma 1");
    verify->add_option("--o-lattice", o.olattice, "o-lattice spec for --theorem 4");
    add_common_flags(verify, o);
    verify->add_flag("--no-timing", o.no_timing, "omit elapsed_ms from json output");

    auto* sweep = app.add_subcommand("sweep", "run a claim over a parameter grid, one csv/json row per instance");
    sweep->add_option("--family", o.family, "grid family")
        ->required()
        ->check(CLI::IsMember({"crystal2", "o-lattice", "conjecture"}));
    sweep->add_option("--max-n1", o.max_n1, "crystal2: largest n1")->capture_default_str();
    sweep->add_option("--max-n2", o.max_n2, "crystal2: largest n2")->capture_default_str();
    sweep->add_option("--max-vars", o.max_vars, "o-lattice: largest variable count")->capture_default_str();
    sweep->add_option("--max", o.max_n, "conjecture: largest n1")->capture_default_str();
    add_common_flags(sweep, o);
    sweep->add_flag("--no-timing", o.no_timing, "omit elapsed_ms from json output");

    auto* conj = app.add_subcommand("conjecture", "report pd against n1 for the two-chain family with n2 = 1");
    conj->add_option("--max", o.max_n, "largest n1")->capture_default_str();
    add_common_flags(conj, o);
    conj->add_flag("--no-timing", o.no_timing, "omit elapsed_ms from json output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*lat) return cmd_lattice(o);
        if (*ideal) return cmd_ideal(o);
        if (*gb) return cmd_gb(o);
        if (*betti) return cmd_betti(o);
        if (*verify) return cmd_verify(o);
        if (*sweep) return cmd_sweep(o);
        if (*conj) return cmd_conjecture(o);
    } catch (const crystal::resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
