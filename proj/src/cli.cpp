#include "approxdct/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "approxdct/codec.hpp"
#include "approxdct/image.hpp"
#include "approxdct/metrics.hpp"
#include "approxdct/quality.hpp"
#include "approxdct/scaling.hpp"
#include "approxdct/search.hpp"
#include "approxdct/transform_class.hpp"

namespace approxdct {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json make_manifest(const std::string& command, json parameters,
                   const std::vector<std::string>& outputs) {
    return json{{"command", command},
                {"version", kToolVersion},
                {"parameters", std::move(parameters)},
                {"outputs", outputs}};
}

std::string slug(const ParamVector& a) {
    std::string s = "a";
    for (const auto& v : a) {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%g", v.value());
        s += "_";
        s += buf;
    }
    return s;
}

std::string kernel_filename(std::size_t index, const FrontMember& member) {
    char prefix[8];
    std::snprintf(prefix, sizeof prefix, "%02zu", index + 1);
    std::string name = member.report.label;
    if (name.rfind("a=", 0) == 0) name = slug(member.params.front());
    return std::string(prefix) + "-" + name + ".kern";
}

TransformKernel load_kernel(const std::string& builtin, const std::string& kernel_file,
                            int size) {
    if (builtin.empty() == kernel_file.empty())
        throw CLI::ValidationError("kernel", "pass exactly one of --builtin / --kernel-file");
    if (!builtin.empty()) {
        auto k = builtin_kernel(builtin, size);
        if (!k)
            throw CLI::ValidationError("kernel", "unknown builtin '" + builtin +
                                                     "' (try mrdct, ocbt, j3..j5, rdct, j7, dct)");
        return *k;
    }
    TransformKernel k = parse_kernel(read_text(kernel_file));
    if (k.size() != size)
        throw CLI::ValidationError("kernel", "kernel file is " + std::to_string(k.size()) +
                                                 "-point, requested size " + std::to_string(size));
    return k;
}

const CLI::Validator rho_range = CLI::Validator(
    [](std::string& value) {
        const double rho = std::stod(value);
        return std::abs(rho) < 1.0 ? std::string{} : "correlation must satisfy |rho| < 1";
    },
    "RHO in (-1,1)");

int cmd_search(double rho, const std::string& mode_name, int workers, const fs::path& out_dir) {
    const SearchMode mode = mode_name == "scan" ? SearchMode::scan : SearchMode::pruned;
    fs::create_directories(out_dir / "kernels");

    const ParetoFront front = pareto_search(rho, mode, workers);

    std::vector<std::string> outputs = {"front.csv", "front.json"};
    write_text(out_dir / "front.csv", front_csv(front));
    for (std::size_t i = 0; i < front.members.size(); ++i) {
        const std::string name = kernel_filename(i, front.members[i]);
        TransformKernel k = orthonormalize(front.members[i].params.front());
        k.label = front.members[i].report.label;
        write_text(out_dir / "kernels" / name, serialize_kernel(k));
        outputs.push_back("kernels/" + name);
    }

    const json manifest = make_manifest(
        "search", json{{"rho", rho}, {"mode", mode_name}, {"workers", workers}}, outputs);
    json report = json::parse(front_json(front));
    report["manifest"] = manifest;
    write_text(out_dir / "front.json", report.dump(2) + "\n");
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    std::cout << front_csv(front);
    std::cout << "orthogonal candidates: " << front.stats.orthogonal << " of "
              << front.stats.total_enumerated << " enumerated\n";
    std::cout << "front: " << front.stats.front_groups << " objective groups, "
              << front.stats.front_vectors << " parameter vectors\n";
    if (front.stats.front_groups > 7)
        std::cout << "note: " << front.stats.front_groups
                  << " non-dominated objective groups exceed the 7 published optima; "
                     "the surplus is reported in full above and in front.json\n";
    return 0;
}

int cmd_metrics(const std::string& builtin, const std::string& kernel_file, int size, double rho,
                const std::string& out_file) {
    const TransformKernel kernel = load_kernel(builtin, kernel_file, size);
    const MetricsReport report = evaluate(kernel, rho);
    const std::string table = metrics_csv_header() + "\n" + metrics_csv_row(report) + "\n";
    std::cout << table;
    if (!out_file.empty()) {
        write_text(out_file, table);
        const json manifest = make_manifest("metrics",
                                            json{{"builtin", builtin},
                                                 {"kernel_file", kernel_file},
                                                 {"size", size},
                                                 {"rho", rho}},
                                            {out_file});
        write_text(out_file + ".manifest.json", manifest.dump(2) + "\n");
    }
    return 0;
}

int cmd_compress(const std::string& image_path, const std::string& builtin,
                 const std::string& kernel_file, int block_size, int retained, bool pad,
                 std::string out_file) {
    const TransformKernel kernel = load_kernel(builtin, kernel_file, block_size);
    const GrayImage img = read_pgm(image_path);
    const GrayImage rec = compress_image(img, kernel, {block_size, retained, pad});
    if (out_file.empty())
        out_file = fs::path(image_path).stem().string() + "_rec.pgm";
    write_pgm(rec, out_file);

    char line[64];
    std::snprintf(line, sizeof line, "psnr_db=%.4f\n", psnr(img, rec));
    std::cout << line;
    std::snprintf(line, sizeof line, "ssim=%.6f\n", ssim(img, rec));
    std::cout << line;

    const json manifest = make_manifest("compress",
                                        json{{"image", image_path},
                                             {"builtin", builtin},
                                             {"kernel_file", kernel_file},
                                             {"N", block_size},
                                             {"r", retained},
                                             {"pad", pad}},
                                        {out_file});
    write_text(out_file + ".manifest.json", manifest.dump(2) + "\n");
    return 0;
}

int cmd_curves(std::string corpus_dir, const std::string& builtin_list,
               const std::vector<std::string>& kernel_files, int block_size, int r_step,
               int r_max, int workers, const std::string& out_file) {
    if (corpus_dir.empty()) {
        if (const char* env = std::getenv(kCorpusEnvVar)) corpus_dir = env;
    }
    if (corpus_dir.empty())
        throw CLI::ValidationError("corpus", std::string("pass a corpus directory or set $") +
                                                 kCorpusEnvVar);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        throw CLI::ValidationError("corpus", "no .pgm images in " + corpus_dir);

    std::vector<GrayImage> corpus;
    corpus.reserve(files.size());
    for (const auto& f : files) corpus.push_back(read_pgm(f));

    std::vector<TransformKernel> kernels;
    std::stringstream names(builtin_list);
    std::string name;
    while (std::getline(names, name, ','))
        if (!name.empty()) kernels.push_back(load_kernel(name, "", block_size));
    for (const auto& f : kernel_files) kernels.push_back(load_kernel("", f, block_size));
    if (kernels.empty()) throw CLI::ValidationError("kernels", "no kernels selected");

    if (r_max <= 0) r_max = block_size * block_size * 3 / 4;
    if (r_step <= 0) r_step = std::max(1, block_size * block_size * 3 / 4 / 48);
    std::vector<int> retained;
    for (int r = 1; r <= r_max; r += r_step) retained.push_back(r);

    const auto rows = batch_run(corpus, kernels, retained, block_size, workers);
    write_text(out_file, rate_quality_csv(rows));

    json file_names = json::array();
    for (const auto& f : files) file_names.push_back(f.filename().string());
    const json manifest = make_manifest("curves",
                                        json{{"corpus", corpus_dir},
                                             {"images", file_names},
                                             {"builtin", builtin_list},
                                             {"kernel_files", kernel_files},
                                             {"N", block_size},
                                             {"r_step", r_step},
                                             {"r_max", r_max},
                                             {"workers", workers}},
                                        {out_file});
    write_text(out_file + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << out_file << " (" << rows.size() << " rows over " << corpus.size()
              << " images)\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Multiparametric multiplierless DCT approximations", "approxdct"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // search
    auto* search = app.add_subcommand("search", "Pareto-optimal search over the transform class");
    double rho = kDefaultRho;
    std::string mode = "pruned";
    int workers = 1;
    std::string out_dir = ".";
    search->add_option("--rho", rho, "AR(1) correlation")->check(rho_range);
    search->add_option("--mode", mode, "enumeration mode")
        ->check(CLI::IsMember({"scan", "pruned"}));
    search->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    search->add_option("--out", out_dir, "output directory");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "figures of merit for one kernel");
    std::string builtin, kernel_file, metrics_out;
    int size = 8;
    double mrho = kDefaultRho;
    metrics->add_option("--builtin", builtin, "builtin kernel name");
    metrics->add_option("--kernel-file", kernel_file, "kernel file path");
    metrics->add_option("--size", size, "transform size")->check(CLI::IsMember({8, 16, 32}));
    metrics->add_option("--rho", mrho, "AR(1) correlation")->check(rho_range);
    metrics->add_option("--out", metrics_out, "also write the row to this CSV file");

    // compress
    auto* compress = app.add_subcommand("compress", "block-compress one grayscale image");
    std::string image_path, cbuiltin, ckernel_file, compress_out;
    int block_size = 8, retained = 0;
    bool pad = false;
    compress->add_option("image", image_path, "input PGM image")->required();
    compress->add_option("--builtin", cbuiltin, "builtin kernel name");
    compress->add_option("--kernel-file", ckernel_file, "kernel file path");
    compress->add_option("--N", block_size, "block size")->check(CLI::IsMember({8, 16, 32}));
    compress->add_option("--r", retained, "retained zig-zag coefficients")->required();
    compress->add_flag("--pad", pad, "edge-pad images not divisible by N");
    compress->add_option("--out", compress_out, "reconstructed image path");

    // curves
    auto* curves = app.add_subcommand("curves", "rate-quality sweep over an image corpus");
    std::string corpus_dir, curves_builtin = "mrdct,rdct,j7,dct", curves_out = "curves.csv";
    std::vector<std::string> curve_kernel_files;
    int cN = 8, r_step = 0, r_max = 0, cworkers = 1;
    curves->add_option("corpus", corpus_dir, "directory of .pgm images");
    curves->add_option("--builtin", curves_builtin, "comma-separated builtin kernels");
    curves->add_option("--kernel-file", curve_kernel_files, "additional kernel files");
    curves->add_option("--N", cN, "block size")->check(CLI::IsMember({8, 16, 32}));
    curves->add_option("--r-step", r_step, "sweep step (0 = auto)");
    curves->add_option("--r-max", r_max, "sweep end (0 = auto, ~0.75*N^2)");
    curves->add_option("--workers", cworkers, "worker threads")->check(CLI::PositiveNumber);
    curves->add_option("--out", curves_out, "output CSV path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (search->parsed()) return cmd_search(rho, mode, workers, out_dir);
        if (metrics->parsed()) return cmd_metrics(builtin, kernel_file, size, mrho, metrics_out);
        if (compress->parsed()) {
            if (retained < 1 || retained > block_size * block_size)
                throw CLI::ValidationError("--r", "retained count must be in [1, N^2]");
            return cmd_compress(image_path, cbuiltin, ckernel_file, block_size, retained, pad,
                                compress_out);
        }
        if (curves->parsed())
            return cmd_curves(corpus_dir, curves_builtin, curve_kernel_files, cN, r_step, r_max,
                              cworkers, curves_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace approxdct
