#include "slicekit/io.hpp"

#include <json.hpp>

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slicekit {

using json = nlohmann::ordered_json;

namespace {

std::string rat_num_den(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<Rat> parse_values(const json& j, std::size_t expected) {
    if (!j.contains("values") || !j["values"].is_array())
        throw std::invalid_argument("missing values array");
    const auto& arr = j["values"];
    if (arr.size() != expected)
        throw std::invalid_argument("value count mismatch");
    std::vector<Rat> vals;
    vals.reserve(expected);
    for (const auto& s : arr) vals.push_back(rat_from_string(s.get<std::string>()));
    return vals;
}

}  // namespace

std::string slice_function_to_json(const SliceFunction& f) {
    json j;
    j["kind"] = "slice";
    j["n"] = f.domain->n();
    j["ell"] = f.domain->ell();
    json vals = json::array();
    for (const auto& v : f.values) vals.push_back(rat_num_den(v));
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

SliceFunction slice_function_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("kind", "") != "slice")
        throw std::invalid_argument("expected kind=\"slice\"");
    int n = j.at("n").get<int>(), ell = j.at("ell").get<int>();
    DomainPtr d = make_domain(n, ell);
    return SliceFunction(d, parse_values(j, d->size()));
}

std::string cube_function_to_json(const CubeFunction& f) {
    json j;
    j["kind"] = "cube";
    j["n"] = f.n;
    json vals = json::array();
    for (const auto& v : f.values) vals.push_back(rat_num_den(v));
    j["values"] = std::move(vals);
    return j.dump(2) + "\n";
}

CubeFunction cube_function_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("kind", "") != "cube")
        throw std::invalid_argument("expected kind=\"cube\"");
    int n = j.at("n").get<int>();
    return CubeFunction(n, parse_values(j, std::size_t{1} << n));
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string derivative_assignment_to_text(const DerivativeAssignment& z) {
    std::string out = "level " + std::to_string(z.level) + "\n";
    for (const auto& [P, v] : z.entries) {
        std::string t = P.to_string();
        out += (t.empty() ? "()" : t) + " := " + rat_num_den(v) + "\n";
    }
    return out;
}

DerivativeAssignment parse_derivative_assignment(const std::string& text, int n) {
    DerivativeAssignment z;
    std::istringstream in(text);
    std::string line;
    bool have_level = false;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        if (!have_level) {
            std::istringstream hdr(line);
            std::string word;
            hdr >> word >> z.level;
            if (word != "level" || hdr.fail())
                throw std::invalid_argument("expected \"level <l>\" header line");
            have_level = true;
            continue;
        }
        auto sep = line.find(":=");
        if (sep == std::string::npos)
            throw std::invalid_argument("expected \"tuple := num/den\": " + line);
        std::string tpart = line.substr(0, sep);
        if (tpart.find("()") != std::string::npos) tpart = "";
        KTuple P = parse_tuple(tpart);
        validate_tuple(P, n);
        std::string vpart = line.substr(sep + 2);
        auto b = vpart.find_first_not_of(" \t\r");
        auto e = vpart.find_last_not_of(" \t\r");
        if (b == std::string::npos) throw std::invalid_argument("missing value: " + line);
        z.entries[P] = rat_from_string(vpart.substr(b, e - b + 1));
    }
    if (!have_level) throw std::invalid_argument("empty assignment file");
    return z;
}

namespace {

// Deterministic PRNG (splitmix64): stable across platforms and standard
// library versions, unlike the std distributions.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

std::vector<int> parse_coord_list(const std::string& body) {
    std::vector<int> coords;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty coordinate in list");
        coords.push_back(std::stoi(item));
    }
    return coords;
}

Rat random_rational(SplitMix64& rng) {
    long num = static_cast<long>(rng.next() % 17) - 8;
    long den = static_cast<long>(rng.next() % 8) + 1;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

SliceFunction parse_slice_function_spec(const std::string& text, DomainPtr d) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "const") return constant(d, rat_from_string(body));
    if (head == "dictator") return dictator(d, std::stoi(body));
    if (head == "and") return and_function(d, parse_coord_list(body));
    if (head == "psi") {
        KTuple P = parse_tuple(body);
        validate_tuple(P, d->n());
        return psi_function(d, P);
    }
    if (head == "chi") return chi_function(d, parse_coord_list(body));
    if (head == "maj") {
        // Constant on a slice: every point has the same Hamming weight.
        return constant(d, Rat(2 * d->ell() > d->n() ? 1 : 0));
    }
    if (head == "random-bool" || head == "random-rat") {
        SplitMix64 rng(std::stoull(body));
        SliceFunction f(d);
        for (auto& v : f.values)
            v = head == "random-bool" ? Rat(static_cast<long>(rng.next() & 1))
                                      : random_rational(rng);
        return f;
    }
    if (head == "file") {
        SliceFunction f = slice_function_from_json(read_text_file(body));
        if (f.domain->n() != d->n() || f.domain->ell() != d->ell())
            throw std::invalid_argument("file domain does not match --n/--ell");
        return f;
    }
    throw std::invalid_argument("unknown function spec: " + text);
}

CubeFunction parse_cube_function_spec(const std::string& text, int n) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string body = colon == std::string::npos ? "" : text.substr(colon + 1);
    std::size_t size = std::size_t{1} << n;
    if (head == "const") {
        CubeFunction f(n);
        Rat c = rat_from_string(body);
        for (auto& v : f.values) v = c;
        return f;
    }
    if (head == "dictator") {
        int i = std::stoi(body);
        if (i < 1 || i > n) throw std::invalid_argument("coordinate out of range");
        CubeFunction f(n);
        for (Mask x = 0; x < size; ++x) f.values[x] = Rat(bit(x, i) ? 1 : 0);
        return f;
    }
    if (head == "and") {
        auto T = parse_coord_list(body);
        Mask t = 0;
        for (int c : T) {
            if (c < 1 || c > n) throw std::invalid_argument("coordinate out of range");
            t |= Mask{1} << (c - 1);
        }
        CubeFunction f(n);
        for (Mask x = 0; x < size; ++x) f.values[x] = Rat((x & t) == t ? 1 : 0);
        return f;
    }
    if (head == "parity") {
        auto T = parse_coord_list(body);
        Mask t = 0;
        for (int c : T) {
            if (c < 1 || c > n) throw std::invalid_argument("coordinate out of range");
            t |= Mask{1} << (c - 1);
        }
        CubeFunction f(n);
        for (Mask x = 0; x < size; ++x)
            f.values[x] = Rat(std::popcount(x & t) % 2 == 0 ? 1 : -1);
        return f;
    }
    if (head == "maj") {
        if (n % 2 == 0) throw std::invalid_argument("maj requires odd n");
        CubeFunction f(n);
        for (Mask x = 0; x < size; ++x)
            f.values[x] = Rat(2 * std::popcount(x) > n ? 1 : 0);
        return f;
    }
    if (head == "random-bool" || head == "random-rat") {
        SplitMix64 rng(std::stoull(body));
        CubeFunction f(n);
        for (auto& v : f.values)
            v = head == "random-bool" ? Rat(static_cast<long>(rng.next() & 1))
                                      : random_rational(rng);
        return f;
    }
    if (head == "file") {
        CubeFunction f = cube_function_from_json(read_text_file(body));
        if (f.n != n) throw std::invalid_argument("file cube size does not match --n");
        return f;
    }
    throw std::invalid_argument("unknown cube function spec: " + text);
}

}  // namespace slicekit
