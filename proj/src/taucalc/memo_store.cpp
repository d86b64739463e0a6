#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>

#include "wpvol/tau.hpp"

namespace wpvol {

MemoStore::MemoStore(const MemoStore& other) {
  std::shared_lock lock(other.mutex_);
  map_ = other.map_;
}

MemoStore::MemoStore(MemoStore&& other) noexcept {
  std::unique_lock lock(other.mutex_);
  map_ = std::move(other.map_);
}

MemoStore& MemoStore::operator=(MemoStore other) noexcept {
  std::unique_lock lock(mutex_);
  map_ = std::move(other.map_);
  return *this;
}

std::optional<Rational> MemoStore::find(const TauKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(const TauKey& key, const Rational& value) {
  std::unique_lock lock(mutex_);
  map_.try_emplace(key, value);
}

std::size_t MemoStore::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

void MemoStore::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::vector<std::pair<TauKey, Rational>> MemoStore::entries() const {
  std::vector<std::pair<TauKey, Rational>> out;
  {
    std::shared_lock lock(mutex_);
    out.assign(map_.begin(), map_.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::string format_cache_line(const TauKey& key, const Rational& value) {
  return key.to_string() + "|" + to_string(value);
}

std::pair<TauKey, Rational> parse_cache_line(const std::string& line) {
  const auto first = line.find('|');
  const auto second = first == std::string::npos ? std::string::npos : line.find('|', first + 1);
  if (second == std::string::npos || line.find('|', second + 1) != std::string::npos) {
    throw std::invalid_argument("expected 'g|d1,...,dn|p/q'");
  }
  const std::string genus_text = line.substr(0, first);
  const std::string index_text = line.substr(first + 1, second - first - 1);
  const std::string value_text = line.substr(second + 1);

  const auto parse_nonneg = [](const std::string& s, const char* what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        s.size() > 6) {
      throw std::invalid_argument(std::string("malformed ") + what + " '" + s + "'");
    }
    return std::stoi(s);
  };

  const int genus = parse_nonneg(genus_text, "genus");
  std::vector<int> indices;
  if (index_text != "-") {
    std::stringstream ss(index_text);
    std::string item;
    while (std::getline(ss, item, ',')) indices.push_back(parse_nonneg(item, "index"));
    if (index_text.empty() || index_text.back() == ',') throw std::invalid_argument("malformed index list");
  }
  if (!std::is_sorted(indices.begin(), indices.end(), std::greater<>())) {
    throw std::invalid_argument("indices must be sorted descending");
  }
  return {TauKey(genus, std::move(indices)), parse_rational(value_text)};
}

void save_cache(const MemoStore& store, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  for (const auto& [key, value] : store.entries()) lines.push_back(format_cache_line(key, value));
  std::sort(lines.begin(), lines.end());

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CacheError("cannot open cache file '" + path.string() + "' for writing");
  for (const auto& line : lines) out << line << '\n';
  out.flush();
  if (!out) throw CacheError("failed writing cache file '" + path.string() + "'");
}

MemoStore load_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CacheError("cannot open cache file '" + path.string() + "'");
  MemoStore store;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    try {
      auto [key, value] = parse_cache_line(line);
      store.insert(key, value);
    } catch (const std::invalid_argument& e) {
      throw CacheError(path.string() + ":" + std::to_string(line_number) + ": " + e.what());
    }
  }
  if (in.bad()) throw CacheError("failed reading cache file '" + path.string() + "'");
  return store;
}

}  // namespace wpvol
