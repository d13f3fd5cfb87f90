#include "llcent/space.hpp"

#include <algorithm>

namespace llcent {

TrackSubspace::TrackSubspace(std::vector<int> t) : tracks(std::move(t)) {
  std::sort(tracks.begin(), tracks.end());
  tracks.erase(std::unique(tracks.begin(), tracks.end()), tracks.end());
  for (int tr : tracks)
    if (tr < 1) throw std::invalid_argument("track indices are 1-based");
}

bool TrackSubspace::contains(int track) const {
  return std::binary_search(tracks.begin(), tracks.end(), track);
}

std::vector<int> TrackSubspace::complement(int total_tracks) const {
  std::vector<int> out;
  for (int tr = 1; tr <= total_tracks; ++tr)
    if (!contains(tr)) out.push_back(tr);
  return out;
}

void add_to(Vec& v, Coord c, Scalar value, const FieldSpec& field) {
  if (value == 0) return;
  auto it = v.find(c);
  if (it == v.end()) {
    v.emplace(c, value);
    return;
  }
  Scalar s = field.add(it->second, value);
  if (s == 0)
    v.erase(it);
  else
    it->second = s;
}

std::vector<Coord> window_labels(int tracks, int pos_lo, int pos_hi) {
  std::vector<Coord> out;
  if (pos_hi < pos_lo) return out;
  out.reserve(static_cast<std::size_t>(tracks) * (pos_hi - pos_lo + 1));
  for (int tr = 1; tr <= tracks; ++tr)
    for (int pos = pos_lo; pos <= pos_hi; ++pos) out.push_back({tr, pos});
  return out;
}

std::vector<Scalar> dense_row(const Vec& v, const std::vector<Coord>& labels) {
  std::vector<Scalar> row(labels.size(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = v.find(labels[i]);
    if (it != v.end()) row[i] = it->second;
  }
  return row;
}

} // namespace llcent
