#include <algorithm>

#include "kempe/error.hpp"
#include "kempe/reconfig.hpp"

namespace kempe {

Coloring canonical_relabel(const Coloring& phi) {
  std::vector<Color> relabel(phi.k + 1, 0);
  Color next = 1;
  Coloring out = phi;
  for (auto& c : out.colors) {
    if (relabel[c] == 0) relabel[c] = next++;
    c = relabel[c];
  }
  return out;
}

namespace {

// All proper colorings, row-major, in lexicographic order.
class ColoringTable {
 public:
  ColoringTable(const Graph& g, int k, bool quotient, long long cap)
      : g_(g), n_(g.vertex_count()), k_(k), quotient_(quotient), cap_(cap), row_(n_, 0) {
    if (n_ > 0) fill(0, 0);
  }

  long long size() const noexcept { return static_cast<long long>(rows_.size()) / std::max(n_, 1); }

  Coloring at(long long i) const {
    Coloring phi{k_, std::vector<Color>(rows_.begin() + i * n_, rows_.begin() + (i + 1) * n_)};
    return phi;
  }

  long long find(const std::vector<Color>& colors) const {
    long long lo = 0, hi = size();
    while (lo < hi) {
      long long mid = (lo + hi) / 2;
      auto row = rows_.begin() + mid * n_;
      if (std::lexicographical_compare(row, row + n_, colors.begin(), colors.end())) lo = mid + 1;
      else hi = mid;
    }
    if (lo < size() && std::equal(colors.begin(), colors.end(), rows_.begin() + lo * n_)) return lo;
    return -1;
  }

 private:
  void fill(int v, int max_used) {
    if (v == n_) {
      if (size() >= cap_) {
        throw Error(ErrorKind::StateCapExceeded,
                    "more than " + std::to_string(cap_) + " colorings; enumerated " +
                        std::to_string(size()) + " before stopping");
      }
      rows_.insert(rows_.end(), row_.begin(), row_.end());
      return;
    }
    const int top = quotient_ ? std::min(k_, max_used + 1) : k_;
    for (int c = 1; c <= top; ++c) {
      bool ok = true;
      for (Vertex u : g_.neighbors(v))
        if (u < v && row_[u] == c) ok = false;
      if (!ok) continue;
      row_[v] = static_cast<Color>(c);
      fill(v + 1, std::max(max_used, c));
    }
    row_[v] = 0;
  }

  const Graph& g_;
  int n_;
  int k_;
  bool quotient_;
  long long cap_;
  std::vector<Color> row_;
  std::vector<Color> rows_;
};

// Calls visit(neighbor) for every coloring one Kempe move away.
template <typename Visit>
void for_each_neighbor(const Graph& g, const Coloring& phi, bool quotient, KempeWorkspace& ws,
                       Visit&& visit) {
  Coloring next;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int beta = 1; beta <= phi.k; ++beta) {
      if (beta == phi[v]) continue;
      next = phi;
      ws.apply(g, next, {v, phi[v], beta});
      visit(quotient ? canonical_relabel(next) : next);
    }
  }
}

}  // namespace

ClassReport kempe_classes(const Graph& g, int k, bool quotient, long long state_cap) {
  if (k < 1 || k > 255) throw Error(ErrorKind::InvalidArgument, "k must be in 1..255");
  ColoringTable table(g, k, quotient, state_cap);
  ClassReport report;
  report.k = k;
  report.quotient = quotient;
  report.state_count = table.size();
  std::vector<int> klass(table.size(), -1);
  KempeWorkspace ws(g.vertex_count());
  std::vector<long long> queue;
  for (long long start = 0; start < table.size(); ++start) {
    if (klass[start] >= 0) continue;
    const int id = report.class_count();
    report.representatives.push_back(table.at(start));
    klass[start] = id;
    queue.assign(1, start);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for_each_neighbor(g, table.at(queue[head]), quotient, ws, [&](const Coloring& next) {
        long long j = table.find(next.colors);
        if (j >= 0 && klass[j] < 0) {
          klass[j] = id;
          queue.push_back(j);
        }
      });
    }
    report.class_sizes.push_back(static_cast<long long>(queue.size()));
  }
  return report;
}

ClassIndex::ClassIndex(const Graph& g, const ClassReport& report) : quotient_(report.quotient) {
  KempeWorkspace ws(g.vertex_count());
  auto key = [](const Coloring& phi) { return std::string(phi.colors.begin(), phi.colors.end()); };
  for (const Coloring& rep : report.representatives) {
    const int id = classes_++;
    std::vector<Coloring> queue{rep};
    index_.emplace(key(rep), id);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Coloring current = queue[head];
      for_each_neighbor(g, current, quotient_, ws, [&](const Coloring& next) {
        if (index_.emplace(key(next), id).second) queue.push_back(next);
      });
    }
  }
}

std::optional<int> ClassIndex::class_of(const Coloring& phi) const {
  const Coloring c = quotient_ ? canonical_relabel(phi) : phi;
  auto it = index_.find(std::string(c.colors.begin(), c.colors.end()));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace kempe
