#include "bdc/cli/cache_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace bdc::cli {

namespace {

constexpr const char* header = "bdc-memo-cache 1";

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

bool valid_key(const std::string& key) {
    if (key.empty()) return false;
    for (char c : key) {
        if (c != '(' && c != ')' && (c < '0' || c > '9')) return false;
    }
    return true;
}

// Parses "{d:c,d:c}".
std::optional<SphereCountVector> parse_counts(const std::string& s) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') return std::nullopt;
    SphereCountVector v;
    const std::string body = s.substr(1, s.size() - 2);
    if (body.empty()) return v;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) return std::nullopt;
        int d = 0;
        std::uint64_t c = 0;
        const char* a = item.data();
        const auto r1 = std::from_chars(a, a + colon, d);
        const auto r2 = std::from_chars(a + colon + 1, a + item.size(), c);
        if (r1.ec != std::errc{} || r1.ptr != a + colon || r2.ec != std::errc{} ||
            r2.ptr != a + item.size() || d < -1 || c == 0) {
            return std::nullopt;
        }
        v.add(d, c);
    }
    return v;
}

}  // namespace

std::string CacheFile::encode(const CanonicalKey& key, const SphereCountVector& v) {
    const std::string payload = key + "\t" + v.to_string();
    return payload + "\t" + hex(fnv1a(payload));
}

bool CacheFile::load(MemoCache& cache, std::ostream& warn) {
    loaded_.clear();
    corrupt_ = false;
    std::ifstream in(path_);
    if (!in) return true;

    std::string line;
    std::unordered_map<CanonicalKey, SphereCountVector> records;
    bool ok = static_cast<bool>(std::getline(in, line)) && line == header;
    while (ok && std::getline(in, line)) {
        const auto t1 = line.find('\t');
        const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
        if (t2 == std::string::npos) {
            ok = false;
            break;
        }
        const std::string key = line.substr(0, t1);
        const std::string payload = line.substr(0, t2);
        const auto counts = parse_counts(line.substr(t1 + 1, t2 - t1 - 1));
        if (!valid_key(key) || !counts || line.substr(t2 + 1) != hex(fnv1a(payload))) {
            ok = false;
            break;
        }
        records.insert_or_assign(key, *counts);
    }
    if (!ok) {
        corrupt_ = true;
        warn << "warning: ignoring corrupt memo cache " << path_ << '\n';
        return false;
    }
    for (const auto& [k, v] : records) cache.insert(k, v);
    loaded_ = std::move(records);
    return true;
}

void CacheFile::save(const MemoCache& cache) const {
    std::ifstream probe(path_);
    const bool fresh = corrupt_ || !probe;
    probe.close();
    std::ofstream out(path_, fresh ? std::ios::trunc : std::ios::app);
    if (!out) return;
    if (fresh) out << header << '\n';

    // Sorted for reproducible files.
    std::map<CanonicalKey, SphereCountVector> added;
    for (const auto& [k, v] : cache.snapshot()) {
        if (!loaded_.contains(k)) added.emplace(k, v);
    }
    for (const auto& [k, v] : added) out << encode(k, v) << '\n';
}

}  // namespace bdc::cli
