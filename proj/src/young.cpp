#include "suned/young.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace suned::young {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    if (rows_.empty())
        throw std::invalid_argument("Young diagram needs at least one row");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] <= 0)
            throw std::invalid_argument("Young diagram rows must be positive");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument(
                "Young diagram rows must be non-ascending");
    }
}

int YoungDiagram::box_count() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::string YoungDiagram::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    return s;
}

const char* to_string(DominanceRelation r) {
    switch (r) {
        case DominanceRelation::StrictlyAbove: return "strictly-above";
        case DominanceRelation::StrictlyBelow: return "strictly-below";
        case DominanceRelation::Equal: return "equal";
        case DominanceRelation::Incomparable: return "incomparable";
    }
    return "?";
}

YoungDiagram diagram_from_sector(const fock::Sector& sector) {
    std::vector<int> rows;
    for (int m : sector.counts)
        if (m > 0) rows.push_back(m);
    if (rows.empty())
        throw std::invalid_argument(
            "no diagram for the zero-particle sector");
    std::sort(rows.begin(), rows.end(), std::greater<int>());
    return YoungDiagram(std::move(rows));
}

DominanceRelation dominates(const YoungDiagram& a, const YoungDiagram& b) {
    if (a == b) return DominanceRelation::Equal;
    if (a.box_count() != b.box_count()) return DominanceRelation::Incomparable;
    const std::size_t n = std::max(a.rows().size(), b.rows().size());
    bool a_ge = true, b_ge = true;
    int pa = 0, pb = 0;
    for (std::size_t i = 0; i < n; ++i) {
        pa += i < a.rows().size() ? a.rows()[i] : 0;
        pb += i < b.rows().size() ? b.rows()[i] : 0;
        if (pa < pb) a_ge = false;
        if (pb < pa) b_ge = false;
    }
    if (a_ge) return DominanceRelation::StrictlyAbove;
    if (b_ge) return DominanceRelation::StrictlyBelow;
    return DominanceRelation::Incomparable;
}

YoungDiagram conjugate(const YoungDiagram& d) {
    std::vector<int> rows(d.rows()[0], 0);
    for (int len : d.rows())
        for (int j = 0; j < len; ++j) rows[j] += 1;
    return YoungDiagram(std::move(rows));
}

std::uint64_t irrep_dimension(const YoungDiagram& d, int num_flavors) {
    if (d.row_count() > num_flavors)
        throw std::invalid_argument("diagram " + d.to_string() +
                                    " has more than " +
                                    std::to_string(num_flavors) + " rows");
    std::vector<long long> lam(num_flavors, 0);
    for (int i = 0; i < d.row_count(); ++i) lam[i] = d.rows()[i];
    unsigned __int128 num = 1, den = 1;
    for (int i = 0; i < num_flavors; ++i) {
        for (int j = i + 1; j < num_flavors; ++j) {
            num *= static_cast<unsigned __int128>(lam[i] - lam[j] + j - i);
            den *= static_cast<unsigned __int128>(j - i);
        }
    }
    return static_cast<std::uint64_t>(num / den);
}

YoungDiagram ground_diagram(int boxes, int num_flavors) {
    if (boxes < 1) throw std::invalid_argument("box count must be positive");
    if (num_flavors < 1) throw std::invalid_argument("need at least 1 flavor");
    const int full = boxes / num_flavors;
    const int rem = boxes % num_flavors;
    std::vector<int> rows;
    for (int i = 0; i < rem; ++i) rows.push_back(full + 1);
    for (int i = rem; i < num_flavors; ++i)
        if (full > 0) rows.push_back(full);
    return YoungDiagram(std::move(rows));
}

namespace {

void partitions_rec(int remaining, int max_part, int parts_left,
                    std::vector<int>& acc, std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (parts_left == 0) return;
    // Largest feasible first part gives descending lexicographic order.
    const int lo = (remaining + parts_left - 1) / parts_left;
    for (int p = std::min(remaining, max_part); p >= lo; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, parts_left - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<YoungDiagram> enumerate_diagrams(int boxes, int num_flavors) {
    if (boxes < 1) throw std::invalid_argument("box count must be positive");
    if (num_flavors < 1) throw std::invalid_argument("need at least 1 flavor");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    partitions_rec(boxes, boxes, num_flavors, acc, out);
    return out;
}

}  // namespace suned::young
