#pragma once

#include <string>

#include "largesets/coloring.hpp"
#include "largesets/fin_set.hpp"

namespace largesets {

/// What counts as a solution for a coloring. Thin carries the bound of
/// the color universe searched (with unbounded colors every set omits
/// some color and the notion is vacuous at a horizon); ThinFor carries
/// its target color.
struct SolutionKind {
    enum class Tag { Homogeneous, FreeScalar, FreeSetValued, ThinFor, Thin, Rainbow };
    Tag tag;
    long long color = 0;      // ThinFor target
    long long max_color = 0;  // Thin: search colors 0..max_color

    static SolutionKind homogeneous() { return {Tag::Homogeneous, 0, 0}; }
    static SolutionKind free_scalar() { return {Tag::FreeScalar, 0, 0}; }
    static SolutionKind free_set_valued() { return {Tag::FreeSetValued, 0, 0}; }
    static SolutionKind thin_for(long long c) { return {Tag::ThinFor, c, 0}; }
    static SolutionKind thin(long long max_color) { return {Tag::Thin, 0, max_color}; }
    static SolutionKind rainbow() { return {Tag::Rainbow, 0, 0}; }

    std::string describe() const;
};

/// f constant on domain members contained in H. Rejects H with no member
/// subset: homogeneity asserts a cardinality and has no vacuous reading.
bool is_homogeneous(const Coloring& f, const FinSet& H);

/// f(s) not in H \ s for every member s contained in H (scalar f).
bool is_free_scalar(const Coloring& f, const FinSet& H);

/// f(s) intersect H is contained in s for every member s in H (set-valued f).
bool is_free_setvalued(const Coloring& f, const FinSet& H);

/// No member s contained in H has f(s) = c.
bool is_thin_for(const Coloring& f, const FinSet& H, long long c);

/// f injective on the members contained in H.
bool is_rainbow(const Coloring& f, const FinSet& H);

/// Predicate dispatch for searches. Unlike is_homogeneous, an H with no
/// member subset reports false rather than throwing, so scans skip it.
bool satisfies(const Coloring& f, const SolutionKind& kind, const FinSet& H);

}  // namespace largesets
