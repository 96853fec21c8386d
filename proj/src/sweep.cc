#include <cliquecol/constructors.hh>
#include <cliquecol/errors.hh>
#include <cliquecol/exact.hh>
#include <cliquecol/graph.hh>
#include <cliquecol/rng.hh>
#include <cliquecol/sweep.hh>
#include <cliquecol/theory.hh>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

using namespace cliquecol;

using std::optional;
using std::string;
using std::string_view;
using std::vector;
using std::chrono::milliseconds;

namespace
{
    auto trim(string_view s) -> string_view
    {
        auto first = s.find_first_not_of(" \t\r");
        if (first == string_view::npos)
            return {};
        auto last = s.find_last_not_of(" \t\r");
        return s.substr(first, last - first + 1);
    }

    auto split(string_view s, char sep) -> vector<string_view>
    {
        vector<string_view> parts;
        while (true) {
            auto pos = s.find(sep);
            parts.push_back(trim(s.substr(0, pos)));
            if (pos == string_view::npos)
                return parts;
            s.remove_prefix(pos + 1);
        }
    }

    template <typename T_>
    auto parse_number(string_view s, std::size_t line, string_view key) -> T_
    {
        T_ value{};
        int base = 10;
        if constexpr (std::is_integral_v<T_>)
            if (s.starts_with("0x") || s.starts_with("0X")) {
                s.remove_prefix(2);
                base = 16;
            }
        std::from_chars_result r;
        if constexpr (std::is_integral_v<T_>)
            r = std::from_chars(s.data(), s.data() + s.size(), value, base);
        else
            r = std::from_chars(s.data(), s.data() + s.size(), value);
        if (s.empty() || r.ec != std::errc{} || r.ptr != s.data() + s.size())
            throw ParseError(line, "bad value '" + string(s) + "' for " + string(key));
        return value;
    }

    template <typename T_>
    auto parse_list(string_view s, std::size_t line, string_view key) -> vector<T_>
    {
        vector<T_> values;
        for (auto part : split(s, ','))
            values.push_back(parse_number<T_>(part, line, key));
        return values;
    }

    auto parse_bool(string_view s, std::size_t line, string_view key) -> bool
    {
        if (s == "true" || s == "1" || s == "yes")
            return true;
        if (s == "false" || s == "0" || s == "no")
            return false;
        throw ParseError(line, "bad boolean '" + string(s) + "' for " + string(key));
    }

    auto known_method(string_view m) -> bool
    {
        return std::find(std::begin(sweep_methods), std::end(sweep_methods), m) != std::end(sweep_methods);
    }

    auto format_double(double v) -> string
    {
        char buf[64];
        auto r = std::to_chars(buf, buf + sizeof(buf), v);
        return string(buf, r.ptr);
    }
}

auto SweepConfig::parse(string_view text) -> SweepConfig
{
    SweepConfig cfg;
    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == string_view::npos)
            throw ParseError(line_no, "expected 'key = value'");
        auto key = trim(line.substr(0, eq));
        auto value = trim(line.substr(eq + 1));

        if (key == "n")
            cfg.n_values = parse_list<int>(value, line_no, key);
        else if (key == "x")
            cfg.x_values = parse_list<double>(value, line_no, key);
        else if (key == "p")
            cfg.p_values = parse_list<double>(value, line_no, key);
        else if (key == "trials")
            cfg.trials = parse_number<int>(value, line_no, key);
        else if (key == "seed")
            cfg.seed = parse_number<std::uint64_t>(value, line_no, key);
        else if (key == "methods") {
            cfg.methods.clear();
            for (auto m : split(value, ',')) {
                if (! known_method(m))
                    throw ParseError(line_no, "unknown method '" + string(m) + "'");
                cfg.methods.emplace_back(m);
            }
        }
        else if (key == "budget_ms")
            cfg.budget = milliseconds(parse_number<long long>(value, line_no, key));
        else if (key.starts_with("budget_ms.")) {
            auto method = key.substr(10);
            if (! known_method(method))
                throw ParseError(line_no, "unknown method '" + string(method) + "'");
            cfg.method_budgets[string(method)] = milliseconds(parse_number<long long>(value, line_no, key));
        }
        else if (key == "out")
            cfg.out_path = string(value);
        else if (key == "threads")
            cfg.threads = parse_number<int>(value, line_no, key);
        else if (key == "exact_guard")
            cfg.exact_guard = parse_number<int>(value, line_no, key);
        else if (key == "timings")
            cfg.timings = parse_bool(value, line_no, key);
        else
            throw ParseError(line_no, "unknown key '" + string(key) + "'");
    }
    cfg.check();
    return cfg;
}

auto SweepConfig::load(const string & path) -> SweepConfig
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

auto SweepConfig::check() const -> void
{
    if (n_values.empty())
        throw ParameterError("the sweep needs at least one n");
    if (x_values.empty() == p_values.empty())
        throw ParameterError("give exactly one of x and p");
    if (trials < 1)
        throw ParameterError("trials must be at least 1");
    if (methods.empty())
        throw ParameterError("the sweep needs at least one method");
    if (threads && *threads < 1)
        throw ParameterError("threads must be at least 1");
    if (exact_guard < 1 || exact_guard > exact_vertex_limit)
        throw ParameterError("exact_guard must lie in [1, " + std::to_string(exact_vertex_limit) + "]");
    for (int n : n_values)
        if (n < 0)
            throw ParameterError("n must be non-negative");
    for (double x : x_values)
        if (! (x > 0.0 && x <= 1.0))
            throw ParameterError("x must lie in (0, 1]");
    for (double p : p_values)
        if (! (p >= 0.0 && p <= 1.0))
            throw ParameterError("p must lie in [0, 1]");
    bool needs_exact = std::any_of(methods.begin(), methods.end(),
        [] (const string & m) { return m == "exact" || m == "mcf"; });
    if (needs_exact)
        for (int n : n_values)
            if (n > exact_guard)
                throw ParameterError("exact and mcf need n <= " + std::to_string(exact_guard));
    for (auto & [_, ms] : method_budgets)
        if (ms.count() < 0)
            throw ParameterError("budgets must be non-negative");
    if (budget && budget->count() < 0)
        throw ParameterError("budgets must be non-negative");
}

auto SweepConfig::budget_for(const string & method) const -> optional<milliseconds>
{
    if (auto i = method_budgets.find(method); i != method_budgets.end())
        return i->second;
    return budget;
}

auto SweepConfig::cell_count() const -> std::size_t
{
    return n_values.size() * (x_values.empty() ? p_values.size() : x_values.size()) * static_cast<std::size_t>(trials);
}

auto cliquecol::trial_seed(std::uint64_t master, int n, std::size_t x_index, int trial) -> std::uint64_t
{
    return keyed_hash(master, { static_cast<std::uint64_t>(n), x_index, static_cast<std::uint64_t>(trial) });
}

namespace
{
    auto regime_column(int n, double p) -> string
    {
        if (n < 3 || ! (p > 0.0 && p < 1.0))
            return {};
        auto r = classify_regime(n, p);
        string s = r.label + ":";
        if (r.exponent_prediction) {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g", *r.exponent_prediction);
            s += buf;
        }
        return s;
    }

    auto run_method(const string & method, const Graph & g, double p, const SweepConfig & cfg, SweepRecord & rec) -> void
    {
        auto colour_row = [&] (const Colouring & c) {
            rec.colors = c.palette;
            rec.valid = validate(g, c).valid;
        };

        Budget budget;
        budget.time_limit = cfg.budget_for(method);
        budget.max_vertices = cfg.exact_guard;

        if (method == "domset")
            colour_row(greedy_domset_colouring(g));
        else if (method == "trifree")
            colour_row(trifree_decomposition_colouring(g));
        else if (method == "dense")
            colour_row(dense_two_phase_colouring(g, DenseParams::from(g.size(), p)).colouring);
        else if (method == "portfolio")
            colour_row(portfolio_colouring(g, p, std::nullopt));
        else if (method == "exact") {
            auto result = exact_clique_chromatic(g, budget);
            rec.colors = result.k;
            rec.valid = validate(g, result.witness).valid;
            rec.lower_bound = sparse_lower_bound(g, budget).bound;
        }
        else if (method == "mcf") {
            auto result = exact_mcf(g, budget);
            rec.colors = result.chi_lower;
            rec.lower_bound = result.chi_lower;
            rec.valid = is_maximal_clique_free(g, result.set);
        }
        else
            throw ParameterError("unknown method '" + method + "'");
    }
}

auto cliquecol::run_cell(const SweepConfig & cfg, int n, std::size_t x_index, int trial) -> vector<SweepRecord>
{
    auto seed = trial_seed(cfg.seed, n, x_index, trial);
    GnpParams params = cfg.x_values.empty()
        ? GnpParams::with_p(n, cfg.p_values.at(x_index), seed)
        : GnpParams::with_exponent(n, cfg.x_values.at(x_index), seed);
    auto g = sample_gnp(params);

    optional<double> x = params.x;
    if (! x && n > 1 && params.p > 0.0)
        x = std::log(params.p * n) / std::log(static_cast<double>(n));
    auto regime = regime_column(n, params.p);

    vector<string> methods = cfg.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    vector<SweepRecord> records;
    for (auto & method : methods) {
        SweepRecord rec;
        rec.n = n;
        rec.x = x;
        rec.p = params.p;
        rec.seed = seed;
        rec.trial = trial;
        rec.method = method;
        rec.regime = regime;
        auto start = std::chrono::steady_clock::now();
        try {
            run_method(method, g, params.p, cfg, rec);
            rec.status = "ok";
        }
        catch (const BudgetExhausted &) {
            rec.colors.reset();
            rec.valid.reset();
            rec.status = "timeout";
        }
        catch (const std::exception &) {
            rec.colors.reset();
            rec.valid.reset();
            rec.lower_bound.reset();
            rec.status = "error";
        }
        if (cfg.timings)
            rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        records.push_back(std::move(rec));
    }
    return records;
}

auto cliquecol::resolve_threads(optional<int> requested) -> int
{
    if (requested)
        return std::max(1, *requested);
    if (const char * env = std::getenv("CLIQUECOL_THREADS")) {
        int value = 0;
        string_view s(env);
        auto r = std::from_chars(s.data(), s.data() + s.size(), value);
        if (r.ec == std::errc{} && r.ptr == s.data() + s.size() && value >= 1)
            return value;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

auto cliquecol::run_sweep(const SweepConfig & cfg) -> vector<SweepRecord>
{
    cfg.check();

    struct Cell { int n; std::size_t x_index; int trial; };
    vector<Cell> cells;
    std::size_t columns = cfg.x_values.empty() ? cfg.p_values.size() : cfg.x_values.size();
    for (int n : cfg.n_values)
        for (std::size_t i = 0; i < columns; ++i)
            for (int t = 0; t < cfg.trials; ++t)
                cells.push_back({ n, i, t });

    vector<vector<SweepRecord>> results(cells.size());
    std::atomic<std::size_t> next{ 0 };
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < cells.size(); )
            results[i] = run_cell(cfg, cells[i].n, cells[i].x_index, cells[i].trial);
    };

    auto thread_count = static_cast<std::size_t>(resolve_threads(cfg.threads));
    thread_count = std::min(thread_count, std::max<std::size_t>(1, cells.size()));
    if (thread_count == 1)
        worker();
    else {
        vector<std::jthread> pool;
        for (std::size_t t = 0; t < thread_count; ++t)
            pool.emplace_back(worker);
    }

    vector<SweepRecord> records;
    for (auto & r : results)
        std::move(r.begin(), r.end(), std::back_inserter(records));
    std::stable_sort(records.begin(), records.end(), [] (const SweepRecord & a, const SweepRecord & b) {
        return std::tie(a.n, a.x, a.p, a.trial, a.method) < std::tie(b.n, b.x, b.p, b.trial, b.method);
    });

    if (! cfg.out_path.empty())
        write_file_atomically(cfg.out_path, format_csv(records));
    return records;
}

auto cliquecol::format_csv(const vector<SweepRecord> & records) -> string
{
    string out(sweep_csv_header);
    out += '\n';
    for (auto & r : records) {
        out += std::to_string(r.n) + ',';
        if (r.x)
            out += format_double(*r.x);
        out += ',' + format_double(r.p) + ',' + std::to_string(r.seed) + ',' + std::to_string(r.trial) + ',' + r.method + ',';
        if (r.colors)
            out += std::to_string(*r.colors);
        out += ',';
        if (r.valid)
            out += *r.valid ? "true" : "false";
        out += ',';
        if (r.lower_bound)
            out += std::to_string(*r.lower_bound);
        out += ',';
        if (r.elapsed_ms)
            out += format_double(*r.elapsed_ms);
        out += ',' + r.status + ',' + r.regime + '\n';
    }
    return out;
}

auto cliquecol::parse_csv(string_view text) -> vector<SweepRecord>
{
    auto lines = split(text, '\n');
    if (lines.empty() || lines[0] != sweep_csv_header)
        throw ParseError(1, "expected header '" + string(sweep_csv_header) + "'");

    vector<SweepRecord> records;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto line_no = i + 1;
        if (lines[i].empty())
            continue;
        auto f = split(lines[i], ',');
        if (f.size() != 12)
            throw ParseError(line_no, "expected 12 fields");
        SweepRecord r;
        r.n = parse_number<int>(f[0], line_no, "n");
        if (! f[1].empty())
            r.x = parse_number<double>(f[1], line_no, "x");
        r.p = parse_number<double>(f[2], line_no, "p");
        r.seed = parse_number<std::uint64_t>(f[3], line_no, "seed");
        r.trial = parse_number<int>(f[4], line_no, "trial");
        r.method = string(f[5]);
        if (! f[6].empty())
            r.colors = parse_number<long long>(f[6], line_no, "colors");
        if (! f[7].empty())
            r.valid = parse_bool(f[7], line_no, "valid");
        if (! f[8].empty())
            r.lower_bound = parse_number<long long>(f[8], line_no, "lower_bound");
        if (! f[9].empty())
            r.elapsed_ms = parse_number<double>(f[9], line_no, "elapsed_ms");
        r.status = string(f[10]);
        r.regime = string(f[11]);
        records.push_back(std::move(r));
    }
    return records;
}

auto cliquecol::write_file_atomically(const string & path, string_view contents) -> void
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw std::runtime_error("cannot write " + tmp.string());
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            out.flush();
            if (! out)
                throw std::runtime_error("write failed for " + tmp.string());
        }
        fs::rename(tmp, target);
    }
    catch (...) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw;
    }
}
