#include "spincav/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

#include "spincav/errors.hpp"

namespace spincav {

namespace {

struct ParameterNameEntry {
    const char* name;
    SweepParameter parameter;
};

constexpr ParameterNameEntry kParameterNames[] = {
    {"delta_a", SweepParameter::DeltaA},
    {"delta_m1", SweepParameter::DeltaM1},
    {"delta_m2", SweepParameter::DeltaM2},
    {"delta_m", SweepParameter::DeltaMBoth},
    {"delta_F", SweepParameter::DeltaF},
    {"delta_K1", SweepParameter::DeltaK1},
    {"delta_K2", SweepParameter::DeltaK2},
    {"delta_K", SweepParameter::DeltaKBoth},
    {"g1", SweepParameter::G1},
    {"g2", SweepParameter::G2},
    {"g", SweepParameter::GBoth},
    {"kappa_a", SweepParameter::KappaA},
    {"kappa_m1", SweepParameter::KappaM1},
    {"kappa_m2", SweepParameter::KappaM2},
    {"kappa_m", SweepParameter::KappaMBoth},
    {"temperature", SweepParameter::Temperature},
};

void apply_parameter(ConfigDoc& doc, SweepParameter parameter, double value) {
    switch (parameter) {
        case SweepParameter::DeltaA: doc.delta_a_MHz = value; return;
        case SweepParameter::DeltaM1: doc.delta_m_MHz[0] = value; return;
        case SweepParameter::DeltaM2: doc.delta_m_MHz[1] = value; return;
        case SweepParameter::DeltaMBoth:
            doc.delta_m_MHz = {value, value};
            return;
        case SweepParameter::DeltaF: *doc.sagnac_shift_MHz = value; return;
        case SweepParameter::DeltaK1: (*doc.kerr_shift_MHz)[0] = value; return;
        case SweepParameter::DeltaK2: (*doc.kerr_shift_MHz)[1] = value; return;
        case SweepParameter::DeltaKBoth:
            *doc.kerr_shift_MHz = {value, value};
            return;
        case SweepParameter::G1: doc.g_MHz[0] = value; return;
        case SweepParameter::G2: doc.g_MHz[1] = value; return;
        case SweepParameter::GBoth:
            doc.g_MHz = {value, value};
            return;
        case SweepParameter::KappaA: doc.kappa_a_MHz = value; return;
        case SweepParameter::KappaM1: doc.kappa_m_MHz[0] = value; return;
        case SweepParameter::KappaM2: doc.kappa_m_MHz[1] = value; return;
        case SweepParameter::KappaMBoth:
            doc.kappa_m_MHz = {value, value};
            return;
        case SweepParameter::Temperature: doc.temperature_mK = value; return;
    }
    throw ConfigError("sweep: bad parameter");
}

bool needs_kerr_shift(SweepParameter p) {
    return p == SweepParameter::DeltaK1 || p == SweepParameter::DeltaK2 ||
           p == SweepParameter::DeltaKBoth;
}

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> values(axis.points);
    for (int i = 0; i < axis.points; ++i)
        values[i] = axis.points == 1
                        ? axis.min_value
                        : axis.min_value + (axis.max_value - axis.min_value) * i /
                                               (axis.points - 1);
    return values;
}

int resolve_workers(int max_workers, std::size_t n_points) {
    int workers = max_workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("SPINCAV_MAX_WORKERS")) {
            workers = std::atoi(env);
        }
    }
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers <= 0) workers = 1;
    return static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), std::max<std::size_t>(n_points, 1)));
}

std::string classify(const Error& e) {
    if (dynamic_cast<const SingularSystemError*>(&e)) return "singular_system";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "no_convergence";
    if (dynamic_cast<const DomainError*>(&e)) return "domain_error";
    if (dynamic_cast<const InvalidParamsError*>(&e)) return "invalid_params";
    if (dynamic_cast<const ConfigError*>(&e)) return "config_error";
    if (dynamic_cast<const UnstableSystemError*>(&e)) return "unstable";
    return "numeric_error";
}

}  // namespace

const char* sweep_parameter_name(SweepParameter p) {
    for (const auto& entry : kParameterNames)
        if (entry.parameter == p) return entry.name;
    return "?";
}

SweepParameter sweep_parameter_from_name(const std::string& name) {
    for (const auto& entry : kParameterNames)
        if (name == entry.name) return entry.parameter;
    throw ConfigError("sweep: unknown parameter path: " + name);
}

ConfigDoc apply_preset(const Preset& preset, ConfigDoc base) {
    if (preset.kerr_shift_MHz) {
        base.kerr_shift_MHz = preset.kerr_shift_MHz;
        base.kerr_coefficient_nHz.reset();
        base.kerr_drive_power_mW.reset();
    }
    if (preset.sagnac_shift_MHz) {
        base.sagnac_shift_MHz = preset.sagnac_shift_MHz;
        base.sagnac_spin_rate_kHz.reset();
        base.sagnac_refractive_index.reset();
        base.sagnac_radius_mm.reset();
    }
    if (preset.delta_m_MHz) base.delta_m_MHz = *preset.delta_m_MHz;
    return base;
}

SweepResult run_sweep(const SweepSpec& spec, int max_workers) {
    SweepResult result;
    result.pair_a = spec.pair_a;
    result.pair_b = spec.pair_b;
    result.preset = spec.preset;
    result.base = spec.base;
    result.axes = spec.axes;

    if (spec.preset) {
        const Preset* preset = find_preset(*spec.preset);
        if (!preset) throw ConfigError("sweep: unknown preset: " + *spec.preset);
        if (!spec.axes.empty())
            throw ConfigError("sweep: preset and explicit axes are mutually exclusive");
        result.base = apply_preset(*preset, spec.base);
        result.axes = preset->axes;
    }

    if (result.axes.empty() || result.axes.size() > 2)
        throw ConfigError("sweep: expected one or two axes");
    for (const auto& axis : result.axes) {
        if (axis.points < 1) throw ConfigError("sweep: axis needs at least one point");
        if (axis.points > 1 && !(axis.min_value < axis.max_value))
            throw ConfigError("sweep: axis needs min < max");
        if (needs_kerr_shift(axis.parameter) && !result.base.kerr_shift_MHz)
            throw ConfigError("sweep: Kerr-shift axes require the kerr shift variant");
        if (axis.parameter == SweepParameter::DeltaF && !result.base.sagnac_shift_MHz)
            throw ConfigError("sweep: delta_F axis requires the sagnac shift variant");
    }

    for (const auto& axis : result.axes) result.grids.push_back(axis_values(axis));
    const std::size_t n1 = result.grids[0].size();
    const std::size_t n2 = result.grids.size() == 2 ? result.grids[1].size() : 1;
    const std::size_t n_points = n1 * n2;
    result.points.resize(n_points);

    const auto evaluate = [&](std::size_t p) {
        ConfigDoc doc = result.base;
        apply_parameter(doc, result.axes[0].parameter, result.grids[0][p / n2]);
        if (result.axes.size() == 2)
            apply_parameter(doc, result.axes[1].parameter, result.grids[1][p % n2]);
        SweepPoint point;
        try {
            const EntanglementResult r =
                entanglement_of(to_params(doc), spec.pair_a, spec.pair_b);
            point.stable = r.stable;
            if (r.stable) {
                point.log_negativity = r.log_negativity;
                point.eta_minus = r.eta_minus;
            } else {
                point.error_code = "unstable";
            }
        } catch (const Error& e) {
            point.stable = false;
            point.error_code = classify(e);
        }
        result.points[p] = point;
    };

    const int workers = resolve_workers(max_workers, n_points);
    if (workers <= 1) {
        for (std::size_t p = 0; p < n_points; ++p) evaluate(p);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t p = next.fetch_add(1); p < n_points;
                     p = next.fetch_add(1))
                    evaluate(p);
            });
        for (auto& t : pool) t.join();
    }
    return result;
}

NonreciprocityMap nonreciprocity_map(const SweepSpec& spec, FlipKind flip,
                                     int max_workers) {
    SweepSpec plus = spec;
    SweepSpec minus = spec;
    if (flip == FlipKind::Sagnac) {
        if (!spec.base.sagnac_shift_MHz)
            throw ConfigError("nonreciprocity map: requires the sagnac shift variant");
        const double mag = std::abs(*spec.base.sagnac_shift_MHz);
        plus.base.sagnac_shift_MHz = +mag;
        minus.base.sagnac_shift_MHz = -mag;
    } else {
        if (!spec.base.kerr_shift_MHz)
            throw ConfigError("nonreciprocity map: requires the kerr shift variant");
        const auto mag = *spec.base.kerr_shift_MHz;
        plus.base.kerr_shift_MHz = {{std::abs(mag[0]), std::abs(mag[1])}};
        minus.base.kerr_shift_MHz = {{-std::abs(mag[0]), -std::abs(mag[1])}};
    }

    NonreciprocityMap map;
    map.plus = run_sweep(plus, max_workers);
    map.minus = run_sweep(minus, max_workers);
    map.difference.resize(map.plus.points.size());
    for (std::size_t p = 0; p < map.plus.points.size(); ++p) {
        const auto& a = map.plus.points[p].log_negativity;
        const auto& b = map.minus.points[p].log_negativity;
        if (a && b) map.difference[p] = *a - *b;
    }
    return map;
}

namespace {

std::vector<Preset> make_presets() {
    std::vector<Preset> list;
    const std::array<double, 2> dm_base{-10.0, 10.0};

    // panels a-f: Kerr/Sagnac sign pattern (+,+), (+,0), (+,-), (-,+), (-,0), (-,-)
    struct Panel { char tag; double dk; double df; };
    const Panel panels[] = {{'a', 1.0, 1.0},  {'b', 1.0, 0.0},  {'c', 1.0, -1.0},
                            {'d', -1.0, 1.0}, {'e', -1.0, 0.0}, {'f', -1.0, -1.0}};

    // magnon-detuning maps; ranges centered on each panel's resonance pair
    struct Fig1Range { char tag; double lo; double hi; };
    const Fig1Range fig1_ranges[] = {{'a', -12.0, 8.0},  {'b', -13.0, 9.0},
                                     {'c', -14.0, 10.0}, {'d', -8.0, 12.0},
                                     {'e', -9.0, 13.0},  {'f', -10.0, 14.0}};
    for (int i = 0; i < 6; ++i) {
        Preset p;
        p.name = std::string("fig1") + panels[i].tag;
        p.description = "E_N vs magnon detunings (delta_K=" +
                        std::to_string(static_cast<int>(panels[i].dk)) +
                        " MHz, delta_F=" + std::to_string(static_cast<int>(panels[i].df)) +
                        " MHz)";
        p.axes = {{SweepParameter::DeltaM1, fig1_ranges[i].lo, fig1_ranges[i].hi, 81},
                  {SweepParameter::DeltaM2, fig1_ranges[i].lo, fig1_ranges[i].hi, 81}};
        p.kerr_shift_MHz = {{panels[i].dk, panels[i].dk}};
        p.sagnac_shift_MHz = panels[i].df;
        list.push_back(p);
    }

    list.push_back({"fig2a", "E_N vs Kerr shift (delta_F=+1 MHz)",
                    {{SweepParameter::DeltaKBoth, -5.0, 5.0, 101}},
                    std::nullopt, 1.0, dm_base});
    list.push_back({"fig2b", "E_N vs Sagnac shift (delta_K=+1 MHz)",
                    {{SweepParameter::DeltaF, -5.0, 5.0, 101}},
                    std::array<double, 2>{1.0, 1.0}, std::nullopt, dm_base});

    list.push_back({"fig3a", "E_N vs cavity detuning (delta_K=+1, delta_F=+1 MHz)",
                    {{SweepParameter::DeltaA, -20.0, 20.0, 101}},
                    std::array<double, 2>{1.0, 1.0}, 1.0, dm_base});
    list.push_back({"fig3b", "E_N vs cavity detuning (delta_K=-1, delta_F=-1 MHz)",
                    {{SweepParameter::DeltaA, -20.0, 20.0, 101}},
                    std::array<double, 2>{-1.0, -1.0}, -1.0, dm_base});

    for (int i = 0; i < 6; ++i) {
        Preset p;
        p.name = std::string("fig4") + panels[i].tag;
        p.description = "E_N vs both couplings (delta_K=" +
                        std::to_string(static_cast<int>(panels[i].dk)) +
                        " MHz, delta_F=" + std::to_string(static_cast<int>(panels[i].df)) +
                        " MHz)";
        p.axes = {{SweepParameter::G1, 0.0, 8.0, 81},
                  {SweepParameter::G2, 0.0, 8.0, 81}};
        p.kerr_shift_MHz = {{panels[i].dk, panels[i].dk}};
        p.sagnac_shift_MHz = panels[i].df;
        p.delta_m_MHz = dm_base;
        list.push_back(p);
    }

    list.push_back({"fig5a", "E_N vs common coupling (delta_K=+1, delta_F=+1 MHz)",
                    {{SweepParameter::GBoth, 0.5, 8.0, 101}},
                    std::array<double, 2>{1.0, 1.0}, 1.0, dm_base});
    list.push_back({"fig5b", "E_N vs common coupling (delta_K=-1, delta_F=-1 MHz)",
                    {{SweepParameter::GBoth, 0.5, 8.0, 101}},
                    std::array<double, 2>{-1.0, -1.0}, -1.0, dm_base});

    for (int i = 0; i < 6; ++i) {
        Preset p;
        p.name = std::string("fig6") + panels[i].tag;
        p.description = "E_N vs both magnon decays (delta_K=" +
                        std::to_string(static_cast<int>(panels[i].dk)) +
                        " MHz, delta_F=" + std::to_string(static_cast<int>(panels[i].df)) +
                        " MHz)";
        p.axes = {{SweepParameter::KappaM1, 0.1, 5.0, 81},
                  {SweepParameter::KappaM2, 0.1, 5.0, 81}};
        p.kerr_shift_MHz = {{panels[i].dk, panels[i].dk}};
        p.sagnac_shift_MHz = panels[i].df;
        p.delta_m_MHz = dm_base;
        list.push_back(p);
    }

    list.push_back({"fig7a", "E_N vs common magnon decay (delta_K=+1, delta_F=+1 MHz)",
                    {{SweepParameter::KappaMBoth, 0.1, 5.0, 101}},
                    std::array<double, 2>{1.0, 1.0}, 1.0, dm_base});
    list.push_back({"fig7b", "E_N vs common magnon decay (delta_K=-1, delta_F=-1 MHz)",
                    {{SweepParameter::KappaMBoth, 0.1, 5.0, 101}},
                    std::array<double, 2>{-1.0, -1.0}, -1.0, dm_base});

    list.push_back({"fig8a", "E_N vs bath temperature (delta_K=+1, delta_F=+1 MHz)",
                    {{SweepParameter::Temperature, 0.0, 200.0, 101}},
                    std::array<double, 2>{1.0, 1.0}, 1.0, dm_base});
    list.push_back({"fig8b", "E_N vs bath temperature (delta_K=-1, delta_F=-1 MHz)",
                    {{SweepParameter::Temperature, 0.0, 200.0, 101}},
                    std::array<double, 2>{-1.0, -1.0}, -1.0, dm_base});
    return list;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> list = make_presets();
    return list;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& preset : presets())
        if (preset.name == name) return &preset;
    return nullptr;
}

}  // namespace spincav
