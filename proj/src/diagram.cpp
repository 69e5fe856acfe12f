#include "cjt/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cjt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::string buf;
    auto flush = [&]() {
        if (buf.empty()) throw std::invalid_argument("empty entry in partition");
        size_t pos = 0;
        int v = std::stoi(buf, &pos);
        if (pos != buf.size()) throw std::invalid_argument("bad partition entry: " + buf);
        parts.push_back(v);
        buf.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t') continue;
        if (c == ',') flush();
        else buf.push_back(c);
    }
    if (!buf.empty()) flush();
    else if (!parts.empty()) throw std::invalid_argument("trailing comma in partition");
    return Partition(std::move(parts));
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int j = 1; j <= first(); ++j) {
        int count = 0;
        for (int p : parts_)
            if (p >= j) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

SkewDiagram::SkewDiagram(Partition lambda, Partition mu)
    : lambda_(std::move(lambda)), mu_(std::move(mu)) {
    if (!lambda_.contains(mu_))
        throw std::invalid_argument("mu is not contained in lambda");
}

int SkewDiagram::cells() const { return lambda_.sum() - mu_.sum(); }

int SkewDiagram::depth() const {
    const Partition lc = lambda_.conjugate(), mc = mu_.conjugate();
    int d = 0;
    for (int j = 1; j <= lc.length(); ++j) d = std::max(d, lc.part(j) - mc.part(j));
    return d;
}

std::string SkewDiagram::to_string() const {
    return "(" + lambda_.to_string() + ")/(" + mu_.to_string() + ")";
}

bool positivity_holds(const SkewDiagram& d, int n) {
    if (n < 1) throw std::invalid_argument("rank n must be >= 1");
    return d.depth() <= n + 1;
}

namespace {

void partitions_rec(int max_width, int max_len, int max_sum, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    out.emplace_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    int cap = cur.empty() ? max_width : cur.back();
    for (int p = 1; p <= cap; ++p) {
        if (p > max_sum) break;
        cur.push_back(p);
        partitions_rec(max_width, max_len, max_sum - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SkewDiagram> diagram_universe(int max_cells, int max_width, int max_len) {
    std::vector<Partition> lambdas;
    std::vector<int> cur;
    partitions_rec(max_width, max_len, max_width * max_len, cur, lambdas);
    std::sort(lambdas.begin(), lambdas.end());

    std::vector<SkewDiagram> out;
    for (const Partition& lam : lambdas) {
        // enumerate mu contained in lam
        std::vector<std::vector<int>> mus{{}};
        for (int i = 1; i <= lam.length(); ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& m : mus) {
                int cap = (i == 1) ? lam.part(1) : std::min(lam.part(i), m[i - 2]);
                for (int v = 0; v <= cap; ++v) {
                    auto m2 = m;
                    m2.push_back(v);
                    next.push_back(std::move(m2));
                }
            }
            mus = std::move(next);
        }
        std::vector<SkewDiagram> block;
        for (const auto& m : mus) {
            SkewDiagram d(lam, Partition(m));
            if (d.cells() <= max_cells) block.push_back(std::move(d));
        }
        std::sort(block.begin(), block.end());
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

}  // namespace cjt
