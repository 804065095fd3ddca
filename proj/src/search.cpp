#include <dicirc/cayley.hpp>
#include <dicirc/error.hpp>
#include <dicirc/search.hpp>
#include <dicirc/structure.hpp>

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

namespace dicirc {

auto for_each_spec(int n, const std::function<void(const ConnectionSpec &)> & f) -> void
{
    const int m = 2 * n;
    for (unsigned long long r_mask = 0; r_mask < (1ULL << n); ++r_mask) {
        ResidueSet r(m);
        for (int i = 1; i <= n; ++i)
            if (r_mask >> (i - 1) & 1) {
                r.insert(i);
                r.insert(m - i);
            }
        for (unsigned long long t_mask = 0; t_mask < (1ULL << n); ++t_mask) {
            ResidueSet t(m);
            for (int i = 0; i < n; ++i)
                if (t_mask >> i & 1) {
                    t.insert(i);
                    t.insert(n + i);
                }
            f(ConnectionSpec{ n, r, t });
        }
    }
}

auto enumerate_specs(int n, bool dedup) -> std::vector<EnumeratedSpec>
{
    std::vector<EnumeratedSpec> result;
    for_each_spec(n, [&](const ConnectionSpec & spec) {
        if (dedup && canonicalize(spec) != spec)
            return;
        result.push_back({ spec, validate_spec(spec).connected() });
    });
    return result;
}

auto analyse_drg(const ConnectionSpec & spec, const Graph & g, const IntersectionArray & array,
    const Classification & classification, double tolerance) -> DrgInstance
{
    DrgInstance inst;
    inst.spec = spec;
    inst.array = array;
    inst.classification = classification;
    const int d = array.diameter();

    inst.family = to_string(recognize_family(g).primary);
    auto parts = bipartition(g);
    inst.bipartite = parts.has_value();
    inst.primitive = is_primitive(g, d);
    inst.crown = is_crown_graph(g);

    if (auto anti = antipodal_classes(g, d)) {
        inst.antipodal = true;
        inst.antipodal_by_convention = anti->single_fibre_convention;
        inst.fibre_size = anti->fibre_size;
        if (d >= 2)
            inst.fibres_equitable = is_equitable(g, anti->fibres).has_value();
        if (inst.bipartite && d % 2 == 0 && d >= 2)
            inst.quotient_bipartite_ok = bipartition(anti->quotient).has_value();
        inst.antipodal_nonbipartite_d3 = ! inst.bipartite && d == 3;
        inst.antipodal_bipartite_d4 = inst.bipartite && d == 4;
        if (inst.antipodal_nonbipartite_d3)
            inst.antipodal_array_shape_ok = matches_antipodal_d3_array(array, anti->fibre_size);
        if (inst.antipodal_bipartite_d4)
            inst.antipodal_array_shape_ok = matches_antipodal_bipartite_d4_array(array, anti->fibre_size);
    }

    if (inst.bipartite && d >= 2) {
        auto [plus, minus] = halved_graphs(g);
        inst.halved_complete = is_complete(plus) && is_complete(minus);
    }

    auto partition = distance_partition(g, 0);
    inst.lambda_even = array.lambda() % 2 == 0;
    inst.mu_parity_ok = partition.T_at(2).empty() || array.mu().value_or(0) % 2 == 0;
    inst.fourier = check_fourier_lemma(spec, partition, array, tolerance);
    return inst;
}

namespace
{
    struct Evaluation {
        SpecRow row;
        std::optional<DrgInstance> instance;
        std::optional<CrossCheckFailure> failure;
    };

    auto evaluate(const EnumeratedSpec & e, const SurveyOptions & options) -> Evaluation
    {
        Evaluation out;
        out.row.spec = e.spec;
        out.row.connected = e.connected;
        if (! e.connected)
            return out;

        auto g = build_graph(e.spec);
        auto bfs = is_distance_regular(g, true);
        bool drg = std::holds_alternative<IntersectionArray>(bfs);
        out.row.drg = drg;
        if (drg)
            out.row.array = std::get<IntersectionArray>(bfs).to_string();

        Classification cls;
        try {
            cls = options.classifier(e.spec);
        }
        catch (const std::exception & ex) {
            out.failure = CrossCheckFailure{ e.spec, std::string("classifier threw: ") + ex.what() };
            return out;
        }
        out.row.classification = cls.to_string();

        if (drg != cls.is_drg()) {
            out.failure = CrossCheckFailure{ e.spec,
                std::string("BFS says ") + (drg ? "DRG " + out.row.array : "not DRG (" + std::get<NotDrgWitness>(bfs).describe() + ")")
                    + " but classifier says " + cls.to_string() };
            return out;
        }
        if (! drg)
            return out;

        auto & array = std::get<IntersectionArray>(bfs);
        if (auto expected = cls.expected_array(); ! expected || *expected != array) {
            out.failure = CrossCheckFailure{ e.spec, "BFS array " + array.to_string() + " differs from the array of "
                    + cls.to_string() + (expected ? " " + expected->to_string() : std::string()) };
        }

        out.instance = analyse_drg(e.spec, g, array, cls, options.tolerance);
        out.row.bipartite = out.instance->bipartite;
        out.row.antipodal = out.instance->antipodal;
        out.row.primitive = out.instance->primitive;
        out.row.fourier_ok = out.instance->fourier.holds();
        return out;
    }
}

auto survey(int n, const SurveyOptions & options) -> SurveyReport
{
    SurveyReport report;
    report.n = n;
    report.dedup = options.dedup;

    std::vector<EnumeratedSpec> work;
    for_each_spec(n, [&](const ConnectionSpec & spec) {
        ++report.total_specs;
        bool connected = validate_spec(spec).connected();
        report.connected_specs += connected;
        bool canonical = canonicalize(spec) == spec;
        report.canonical_classes += canonical;
        if (canonical || ! options.dedup)
            work.push_back({ spec, connected });
    });
    report.evaluated_specs = static_cast<long long>(work.size());

    std::vector<Evaluation> results(work.size());
    std::atomic<std::size_t> next{ 0 };
    auto worker = [&] {
        for (auto i = next++; i < work.size(); i = next++)
            results[i] = evaluate(work[i], options);
    };
    int threads = std::max(1, options.workers);
    if (threads == 1)
        worker();
    else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    // work is already in enumeration order, which is the spec order
    for (auto & r : results) {
        report.rows.push_back(r.row);
        if (r.instance)
            report.drg_instances.push_back(std::move(*r.instance));
        if (r.failure)
            report.failures.push_back(std::move(*r.failure));
    }
    auto by_spec = [](auto & a, auto & b) { return a.spec < b.spec; };
    std::stable_sort(report.rows.begin(), report.rows.end(), by_spec);
    std::stable_sort(report.drg_instances.begin(), report.drg_instances.end(), by_spec);
    std::stable_sort(report.failures.begin(), report.failures.end(), by_spec);
    return report;
}

auto right_translate(const GroupTable & group, const std::vector<int> & d, int g) -> std::vector<int>
{
    std::vector<int> result;
    result.reserve(d.size());
    for (int x : d)
        result.push_back(group.multiply(x, g));
    std::sort(result.begin(), result.end());
    return result;
}

auto search_difference_sets(const GroupTable & group, int v, int k, int lambda, std::optional<int> limit)
    -> std::vector<std::vector<int>>
{
    if (group.order() != v)
        throw Error(ErrorCode::ParameterContradiction,
            "group has order " + std::to_string(group.order()) + ", not v = " + std::to_string(v));
    if (k < 0 || k > v || static_cast<long long>(k) * (k - 1) != static_cast<long long>(lambda) * (v - 1))
        throw Error(ErrorCode::ParameterContradiction, "k(k-1) != lambda(v-1) for (" + std::to_string(v) + ","
                + std::to_string(k) + "," + std::to_string(lambda) + ")");

    std::vector<std::vector<int>> found;
    if (k == 0)
        return found;

    std::vector<int> chosen{ 0 };
    std::vector<int> counts(static_cast<std::size_t>(v), 0);

    auto is_least_translate = [&](const std::vector<int> & d) {
        for (int g = 0; g < v; ++g)
            if (right_translate(group, d, g) < d)
                return false;
        return true;
    };

    // adds y's differences with the chosen set; false when some count would exceed lambda
    auto push = [&](int y) {
        bool ok = true;
        for (int x : chosen) {
            for (int diff : { group.multiply(y, group.inverse(x)), group.multiply(x, group.inverse(y)) })
                ok = ++counts[diff] <= lambda && ok;
        }
        chosen.push_back(y);
        return ok;
    };
    auto pop = [&] {
        int y = chosen.back();
        chosen.pop_back();
        for (int x : chosen) {
            --counts[group.multiply(y, group.inverse(x))];
            --counts[group.multiply(x, group.inverse(y))];
        }
    };

    std::function<bool(int)> extend = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == k) {
            // every non-identity count is <= lambda and the total is k(k-1) = lambda(v-1)
            if (is_least_translate(chosen)) {
                found.push_back(chosen);
                if (limit && static_cast<int>(found.size()) >= *limit)
                    return false;
            }
            return true;
        }
        for (int y = start; y <= v - (k - static_cast<int>(chosen.size())); ++y) {
            bool ok = push(y);
            bool more = ! ok || extend(y + 1);
            pop();
            if (! more)
                return false;
        }
        return true;
    };
    extend(1);
    return found;
}

auto reconstruct_family_iii(const std::vector<int> & d, int h) -> std::optional<ConnectionSpec>
{
    const int n = 2 * h;
    auto table = GroupTable::dicyclic(h);
    std::optional<ConnectionSpec> best;
    for (int g = 0; g < table.order(); ++g)
        for (int g2 = 0; g2 < table.order(); ++g2) {
            ConnectionSpec spec{ n, ResidueSet(2 * n), ResidueSet(2 * n) };
            for (int x : d) {
                auto e = element_at(table.multiply(table.multiply(g, x), g2), h);
                (e.flip ? spec.T : spec.R).insert(1 + 2 * e.exp);
            }
            if (! validate_spec(spec).valid())
                continue;
            auto c = canonicalize(spec);
            if (! best || c < *best)
                best = c;
        }
    return best;
}

} // namespace dicirc
