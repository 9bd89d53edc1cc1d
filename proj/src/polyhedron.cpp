#include "kmodenum/polyhedron.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

#include "kmodenum/errors.hpp"

namespace kmodenum {

struct PolyhedronSpec::Cache {
    std::once_flag region_once;
    std::optional<lp::FeasibleRegion> region;
    std::once_flag ranges_once;
    std::vector<lp::CoordinateRange> ranges;
};

PolyhedronSpec::PolyhedronSpec(RationalMatrix matrix, RationalVector rhs)
    : matrix_(std::move(matrix)), rhs_(std::move(rhs)), cache_(std::make_shared<Cache>()) {
    if (rhs_.size() != matrix_.rows()) {
        throw std::invalid_argument("right-hand side length differs from row count");
    }
}

lp::LpProblem PolyhedronSpec::constraints() const {
    return lp::LpProblem{{}, matrix_, rhs_, std::vector<lp::VarKind>(matrix_.cols(), lp::VarKind::NonNegative)};
}

bool PolyhedronSpec::is_empty() const {
    std::call_once(cache_->region_once, [this] { cache_->region.emplace(constraints()); });
    return cache_->region->empty();
}

const RationalVector& PolyhedronSpec::feasible_point() const {
    if (is_empty()) throw EmptyPolyhedron();
    return cache_->region->point();
}

const std::vector<lp::CoordinateRange>& PolyhedronSpec::ranges() const {
    if (is_empty()) throw EmptyPolyhedron();
    std::call_once(cache_->ranges_once, [this] {
        std::vector<lp::CoordinateRange> out;
        out.reserve(num_columns());
        for (std::size_t i = 0; i < num_columns(); ++i) out.push_back(cache_->region->range(i));
        cache_->ranges = std::move(out);
    });
    return cache_->ranges;
}

bool PolyhedronSpec::is_bounded() const {
    for (const auto& r : ranges()) {
        if (!r.upper) return false;
    }
    return true;
}

}  // namespace kmodenum
