#include "gks/hop2_index.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <queue>

namespace gks {

double TwoHopIndex::default_d_max(const Graph& g) {
    double mean = g.mean_edge_weight();
    return mean > 0.0 ? 10.0 * mean : kInfDist;
}

std::vector<NodeId> TwoHopIndex::degree_rank_order(const Graph& g) {
    std::vector<NodeId> order(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

TwoHopIndex TwoHopIndex::build(const Graph& g, double d_max) {
    if (!(d_max > 0.0)) throw DataError("d_max must be positive");
    const std::size_t n = g.node_count();
    TwoHopIndex ix;
    ix.d_max_ = d_max;
    ix.labels_.assign(n, {});

    std::vector<NodeId> order = degree_rank_order(g);

    // Stamped scratch arrays so per-search reset is O(touched).
    std::vector<std::uint32_t> hub_epoch(n, 0);  // labels of current hub, by hub id
    std::vector<double> hub_dist(n, 0.0);
    std::vector<std::uint32_t> seen_epoch(n, 0);  // Dijkstra tentative state
    std::vector<double> tentative(n, 0.0);
    std::vector<NodeId> pred(n, 0);

    using HeapItem = std::pair<double, NodeId>;
    std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap;

    std::uint32_t epoch = 0;
    for (NodeId hub : order) {
        ++epoch;

        // The hub's own label set is complete before its search starts;
        // load it into a dense array for O(1) probes during pruning.
        for (const LabelEntry& e : ix.labels_[hub]) {
            hub_epoch[e.hub] = epoch;
            hub_dist[e.hub] = e.dist;
        }
        hub_epoch[hub] = epoch;
        hub_dist[hub] = 0.0;

        seen_epoch[hub] = epoch;
        tentative[hub] = 0.0;
        pred[hub] = hub;
        heap.push({0.0, hub});

        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d > tentative[v]) continue;  // stale entry
            if (d > d_max) {                 // monotone heap: nothing closer remains
                heap = {};
                break;
            }

            // Prune if the current index already certifies this distance.
            double certified = kInfDist;
            for (const LabelEntry& e : ix.labels_[v])
                if (hub_epoch[e.hub] == epoch) {
                    double s = e.dist + hub_dist[e.hub];
                    if (s < certified) certified = s;
                }
            if (certified <= d) continue;

            ix.labels_[v].push_back({hub, pred[v], d});

            for (const Neighbor& nb : g.neighbors(v)) {
                double nd = d + nb.weight;
                if (nd > d_max) continue;
                if (seen_epoch[nb.to] != epoch || nd < tentative[nb.to]) {
                    seen_epoch[nb.to] = epoch;
                    tentative[nb.to] = nd;
                    pred[nb.to] = v;
                    heap.push({nd, nb.to});
                }
            }
        }
    }

    for (auto& ls : ix.labels_) {
        std::sort(ls.begin(), ls.end(),
                  [](const LabelEntry& a, const LabelEntry& b) { return a.hub < b.hub; });
        ls.shrink_to_fit();
    }
    return ix;
}

TwoHopIndex::Meet TwoHopIndex::best_meet(NodeId s, NodeId t) const {
    const auto& ls = labels_[s];
    const auto& lt = labels_[t];
    Meet best;
    std::size_t i = 0, j = 0;
    while (i < ls.size() && j < lt.size()) {
        if (ls[i].hub == lt[j].hub) {
            double d = ls[i].dist + lt[j].dist;
            if (d < best.dist) {
                best.dist = d;
                best.hub = ls[i].hub;
            }
            ++i;
            ++j;
        } else if (ls[i].hub < lt[j].hub) {
            ++i;
        } else {
            ++j;
        }
    }
    return best;
}

double TwoHopIndex::distance(NodeId s, NodeId t) const {
    Meet m = best_meet(s, t);
    // Beyond d_max the pair counts as disconnected even if some hub pair
    // happens to certify a longer walk.
    return m.dist <= d_max_ ? m.dist : kInfDist;
}

const LabelEntry* TwoHopIndex::find_label(NodeId node, NodeId hub) const {
    const auto& ls = labels_[node];
    auto it = std::lower_bound(ls.begin(), ls.end(), hub,
                               [](const LabelEntry& e, NodeId h) { return e.hub < h; });
    if (it == ls.end() || it->hub != hub) return nullptr;
    return &*it;
}

std::optional<std::vector<NodeId>> TwoHopIndex::shortest_path(NodeId s, NodeId t) const {
    if (s == t) return std::vector<NodeId>{s};
    Meet m = best_meet(s, t);
    if (!(m.dist <= d_max_)) return std::nullopt;

    // Ascend parent pointers from both endpoints to the meeting hub.
    std::vector<NodeId> from_s;  // s .. hub
    for (NodeId cur = s; cur != m.hub;) {
        from_s.push_back(cur);
        const LabelEntry* e = find_label(cur, m.hub);
        if (e == nullptr) throw DataError("corrupt index: broken parent chain");
        cur = e->parent;
    }
    from_s.push_back(m.hub);

    std::vector<NodeId> from_t;  // t .. hub, reversed below
    for (NodeId cur = t; cur != m.hub;) {
        from_t.push_back(cur);
        const LabelEntry* e = find_label(cur, m.hub);
        if (e == nullptr) throw DataError("corrupt index: broken parent chain");
        cur = e->parent;
    }
    for (auto it = from_t.rbegin(); it != from_t.rend(); ++it) from_s.push_back(*it);
    return from_s;
}

IndexStats TwoHopIndex::stats() const {
    IndexStats st;
    for (const auto& ls : labels_) st.total_entries += ls.size();
    st.mean_label_len =
        labels_.empty() ? 0.0
                        : static_cast<double>(st.total_entries) / static_cast<double>(labels_.size());
    st.bytes = 4 + 4 + 8 + 8 + 4ull * labels_.size() + 16ull * st.total_entries;
    return st;
}

namespace {

constexpr char kMagic[4] = {'G', 'K', 'S', '2'};
constexpr std::uint32_t kFormatVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_f64(std::string& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

class Reader {
public:
    Reader(const std::string& path) : in_(path, std::ios::binary), path_(path) {
        if (!in_) throw DataError("cannot open index file " + path);
    }
    std::uint32_t u32() {
        unsigned char b[4];
        read(b, 4);
        return static_cast<std::uint32_t>(b[0]) | static_cast<std::uint32_t>(b[1]) << 8 |
               static_cast<std::uint32_t>(b[2]) << 16 | static_cast<std::uint32_t>(b[3]) << 24;
    }
    std::uint64_t u64() {
        std::uint64_t lo = u32(), hi = u32();
        return lo | hi << 32;
    }
    double f64() {
        std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, 8);
        return v;
    }
    void read(unsigned char* dst, std::size_t n) {
        in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in_.gcount()) != n)
            throw DataError("truncated index file " + path_);
    }

private:
    std::ifstream in_;
    std::string path_;
};

}  // namespace

void TwoHopIndex::save(const std::string& path) const {
    std::string buf;
    buf.reserve(24 + 4 * labels_.size());
    buf.append(kMagic, 4);
    put_u32(buf, kFormatVersion);
    put_u64(buf, labels_.size());
    put_f64(buf, d_max_);
    for (const auto& ls : labels_) {
        put_u32(buf, static_cast<std::uint32_t>(ls.size()));
        for (const LabelEntry& e : ls) {
            put_u32(buf, e.hub);
            put_f64(buf, e.dist);
            put_u32(buf, e.parent);
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write index file " + path);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!out) throw DataError("short write on " + path);
}

TwoHopIndex TwoHopIndex::load(const std::string& path) {
    Reader r(path);
    unsigned char magic[4];
    r.read(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw DataError(path + ": not a 2-hop index file (bad magic)");
    std::uint32_t version = r.u32();
    if (version != kFormatVersion)
        throw DataError(path + ": unsupported index format version " + std::to_string(version));
    TwoHopIndex ix;
    std::uint64_t n = r.u64();
    ix.d_max_ = r.f64();
    ix.labels_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint32_t cnt = r.u32();
        ix.labels_[i].resize(cnt);
        for (std::uint32_t j = 0; j < cnt; ++j) {
            LabelEntry& e = ix.labels_[i][j];
            e.hub = r.u32();
            e.dist = r.f64();
            e.parent = r.u32();
        }
    }
    return ix;
}

}  // namespace gks
