#include "ect/audits.hpp"
#include "ect/curve_io.hpp"
#include "ect/image_io.hpp"
#include "ect/mesh_io.hpp"
#include "ect/svg.hpp"
#include "ect/transforms.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdint>
#include <iostream>
#include <memory>
#include <thread>
#include <variant>

namespace {

using namespace ect;

struct Options {
    std::string input;
    std::string output;
    std::string scheme = "grid";
    int count = 8;
    std::vector<std::string> explicit_directions;
    std::uint64_t seed = 0;
    int workers = 1;
    std::string window;
    std::string convention = "upper";
    std::string denom_bound = "1000000";
    std::string level = "1";
    int k = 0;
    std::size_t index = 0;
};

// Either a bare shape or a shape carrying a constructible function.
struct LoadedInput {
    std::shared_ptr<const Complex> complex;
    std::shared_ptr<const SimplicialComplex> mesh;  // set for mesh inputs
    CellConstFunction function;                     // indicator for meshes
    std::string convention;                         // image convention tag
};

LoadedInput load_input(const Options& opt) {
    auto dotpos = opt.input.rfind('.');
    std::string ext = dotpos == std::string::npos ? "" : opt.input.substr(dotpos);
    LoadedInput in;
    if (ext == ".off" || ext == ".obj") {
        Integer bound(opt.denom_bound);
        auto mesh = std::make_shared<SimplicialComplex>(
            parse_mesh(opt.input, mesh_format_from_path(opt.input), bound));
        in.complex = mesh;
        in.mesh = mesh;
        in.function = indicator(mesh);
    } else if (ext == ".pgm" || ext == ".csv") {
        std::string data = read_text_file(opt.input);
        ImageGrid grid = parse_image_text(data, image_format_from_path(opt.input, data));
        auto conv = opt.convention == "lower" ? LowerCellConvention::Lower
                                              : LowerCellConvention::Upper;
        Point origin(grid.shape.size(), Rational(0));
        std::vector<Rational> spacing(grid.shape.size(), Rational(1));
        CubicalImage image = build_cubical_complex(grid, origin, spacing, conv);
        in.complex = image.complex;
        in.function = std::move(image.function);
        in.convention = opt.convention;
    } else {
        throw std::runtime_error("unrecognized input extension '" + ext + "'");
    }
    return in;
}

std::vector<Direction> directions_for(const Options& opt, std::size_t ambient_dim) {
    if (!opt.explicit_directions.empty()) {
        std::vector<Direction> dirs;
        for (const auto& spec : opt.explicit_directions) {
            Direction v;
            std::istringstream ss(spec);
            std::string tok;
            while (std::getline(ss, tok, ',')) v.push_back(parse_rational(tok));
            dirs.push_back(std::move(v));
        }
        return validate_directions(dirs);
    }
    DirectionScheme scheme;
    if (opt.scheme == "axes")
        scheme = DirectionScheme::Axes;
    else if (opt.scheme == "grid")
        scheme = DirectionScheme::RationalGrid;
    else
        throw std::runtime_error("unknown direction scheme '" + opt.scheme + "'");
    return sample_directions(opt.count, static_cast<int>(ambient_dim), scheme);
}

// Direction-sharded worker pool; results land in direction order, so the
// output bytes do not depend on the worker count.
std::vector<AnyCurve> compute_curves(const std::vector<Direction>& dirs, int workers,
                                     const std::function<AnyCurve(const Direction&)>& job) {
    std::vector<AnyCurve> curves(dirs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < dirs.size(); i = next.fetch_add(1)) {
            try {
                curves[i] = job(dirs[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    return curves;
}

void emit(const Options& opt, const std::string& content) {
    if (opt.output.empty())
        std::cout << content;
    else
        write_text_file(opt.output, content);
}

TransformBundle make_bundle(const Options& opt, std::vector<Direction> dirs,
                            std::vector<AnyCurve> curves, std::optional<Rational> window,
                            const std::string& convention) {
    TransformBundle bundle;
    bundle.directions = std::move(dirs);
    bundle.curves = std::move(curves);
    bundle.window = std::move(window);
    bundle.source = opt.input;
    bundle.convention = convention;
    return bundle;
}

StepCurve step_transform(const LoadedInput& in, const Options& opt, const std::string& name,
                         const Direction& v) {
    if (name == "ect") {
        if (in.mesh) return ect_shape(*in.mesh, v);
        if (!in.function.integer_valued())
            throw std::runtime_error("image has non-integer values: use ert instead of ect");
        return ect_constructible(in.function, v);
    }
    if (name == "lect") return lect(in.function, v, parse_rational(opt.level));
    if (name == "select") return select(in.function, v, parse_rational(opt.level));
    if (name == "ert") return ert(in.function, v);
    throw std::logic_error("unknown transform");
}

int run_step_command(const Options& opt, const std::string& name) {
    LoadedInput in = load_input(opt);
    auto dirs = directions_for(opt, in.complex->ambient_dim());
    auto curves = compute_curves(dirs, opt.workers, [&](const Direction& v) {
        return AnyCurve(step_transform(in, opt, name, v));
    });
    emit(opt, bundle_to_json(make_bundle(opt, std::move(dirs), std::move(curves), std::nullopt,
                                         in.convention)));
    return 0;
}

int run_smooth_command(const Options& opt, const std::string& base) {
    LoadedInput in = load_input(opt);
    auto dirs = directions_for(opt, in.complex->ambient_dim());
    auto steps = compute_curves(dirs, opt.workers, [&](const Direction& v) {
        return AnyCurve(step_transform(in, opt, base, v));
    });
    Rational window;
    if (!opt.window.empty()) {
        window = parse_rational(opt.window);
    } else {
        window = 1;
        for (const auto& c : steps)
            window = std::max(window, default_window(std::get<StepCurve>(c)));
    }
    std::vector<AnyCurve> curves;
    for (const auto& c : steps) curves.emplace_back(sect(std::get<StepCurve>(c), window));
    emit(opt, bundle_to_json(
                  make_bundle(opt, std::move(dirs), std::move(curves), window, in.convention)));
    return 0;
}

int run_invert(const Options& opt) {
    TransformBundle bundle = bundle_from_json(read_text_file(opt.input));
    TransformBundle out = bundle;
    out.window = std::nullopt;
    out.curves.clear();
    for (const auto& c : bundle.curves) {
        const auto* pl = std::get_if<PiecewiseLinearCurve>(&c);
        if (!pl) throw std::runtime_error("invert expects smoothed (pl) curves");
        out.curves.emplace_back(invert_sect(*pl));
    }
    emit(opt, bundle_to_json(out));
    return 0;
}

int run_betti(const Options& opt) {
    LoadedInput in = load_input(opt);
    if (!in.mesh) throw std::runtime_error("betti requires a mesh input");
    auto dirs = directions_for(opt, in.complex->ambient_dim());
    auto curves = compute_curves(dirs, opt.workers, [&](const Direction& v) {
        return AnyCurve(betti_curve(*in.mesh, v, opt.k));
    });
    emit(opt, bundle_to_json(make_bundle(opt, std::move(dirs), std::move(curves), std::nullopt,
                                         "k=" + std::to_string(opt.k))));
    return 0;
}

int run_plot(const Options& opt) {
    std::string text = read_text_file(opt.input);
    AnyCurve curve;
    // Accept both a bundle and a single-curve file.
    try {
        TransformBundle bundle = bundle_from_json(text);
        if (opt.index >= bundle.curves.size())
            throw std::runtime_error("curve index out of range");
        curve = bundle.curves[opt.index];
    } catch (const nlohmann::json::exception&) {
        curve = curve_from_json(text);
    }
    emit(opt, render_svg(curve));
    return 0;
}

int run_verify(const Options& opt) {
    auto reports = run_audit_battery(opt.seed, opt.workers);
    std::cout << reports_to_text(reports);
    if (!opt.output.empty()) write_text_file(opt.output, reports_to_json(reports));
    bool ok = std::all_of(reports.begin(), reports.end(),
                          [](const AuditReport& r) { return r.passed(); });
    return ok ? 0 : 2;
}

void add_common_flags(CLI::App* cmd, Options& opt, bool with_input) {
    if (with_input) cmd->add_option("input", opt.input, "input file")->required();
    cmd->add_option("-o,--output", opt.output, "output file (default: stdout)");
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--workers", opt.workers, "worker thread count");
    cmd->add_option("--window", opt.window, "smoothing window half-width W (rational)");
    cmd->add_option("--convention", opt.convention, "lower-cell convention for images")
        ->check(CLI::IsMember({"upper", "lower"}));
    cmd->add_option("--denom-bound", opt.denom_bound, "quantization denominator bound");
    cmd->add_option("--scheme", opt.scheme, "direction scheme")
        ->check(CLI::IsMember({"axes", "grid"}));
    cmd->add_option("--count", opt.count, "number of sampled directions");
    cmd->add_option("--direction", opt.explicit_directions,
                    "explicit direction 'p/q,p/q,...' (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Euler characteristic transforms of meshes and images"};
    app.require_subcommand(1);
    Options opt;

    struct Sub {
        const char* name;
        const char* help;
        bool with_input;
    };
    for (const Sub& sub : {Sub{"ect", "Euler characteristic transform curves", true},
                           Sub{"sect", "smoothed ECT curves", true},
                           Sub{"lect", "level-set ECT curves at --level", true},
                           Sub{"select", "superlevel-set ECT curves at --level", true},
                           Sub{"ert", "Euler-Radon transform curves", true},
                           Sub{"sert", "smoothed ERT curves", true},
                           Sub{"invert", "recover step curves from smoothed curves", true},
                           Sub{"betti", "Betti number curves of sublevel complexes", true},
                           Sub{"verify", "run the theorem audit battery", false},
                           Sub{"plot", "render a curve file as SVG", true}}) {
        auto* cmd = app.add_subcommand(sub.name, sub.help);
        add_common_flags(cmd, opt, sub.with_input);
        if (std::string(sub.name) == "lect" || std::string(sub.name) == "select")
            cmd->add_option("--level", opt.level, "level/superlevel threshold s (rational)");
        if (std::string(sub.name) == "betti")
            cmd->add_option("--k", opt.k, "homology degree");
        if (std::string(sub.name) == "plot")
            cmd->add_option("--index", opt.index, "curve index within a bundle");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "ect" || name == "lect" || name == "select" || name == "ert")
            return run_step_command(opt, name);
        if (name == "sect") return run_smooth_command(opt, "ect");
        if (name == "sert") return run_smooth_command(opt, "ert");
        if (name == "invert") return run_invert(opt);
        if (name == "betti") return run_betti(opt);
        if (name == "plot") return run_plot(opt);
        if (name == "verify") return run_verify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
