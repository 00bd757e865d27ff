#pragma once

#include <optional>
#include <span>
#include <vector>

#include "domchrom/tree.hpp"

namespace domchrom {

using ColorId = int;

// A total vertex coloring with colors 1..k in first-use order.
class Coloring {
  public:
    Coloring() = default;

    // Relabels arbitrary integer labels to first-use order.
    static Coloring from_labels(std::span<const int> labels);

    int size() const noexcept { return static_cast<int>(colors_.size()); }
    int num_colors() const noexcept { return k_; }
    ColorId operator[](Vertex v) const { return colors_[v]; }
    std::span<const ColorId> colors() const noexcept { return colors_; }

    bool operator==(const Coloring&) const = default;

  private:
    std::vector<ColorId> colors_;
    int k_ = 0;
};

Coloring canonicalize(std::span<const int> labels);

inline Coloring canonicalize(const Coloring& c) { return Coloring::from_labels(c.colors()); }

struct Violation {
    enum class Kind { ImproperEdge, NoDominatedClass };
    Kind kind = Kind::ImproperEdge;
    Arc arc{};         // ImproperEdge
    Vertex vertex = -1; // NoDominatedClass

    bool operator==(const Violation&) const = default;
};

struct Witness {
    enum class Kind { DominatedClass, SinkExempt };
    Kind kind = Kind::SinkExempt;
    ColorId color = 0; // meaningful for DominatedClass

    bool operator==(const Witness&) const = default;
};

struct DominatorCertificate {
    Coloring coloring;
    std::vector<Witness> witness;

    bool operator==(const DominatorCertificate&) const = default;
};

struct Verification {
    std::optional<DominatorCertificate> certificate;
    std::vector<Violation> violations;

    bool ok() const noexcept { return certificate.has_value(); }
};

// Arcs whose endpoints share a color, in sorted arc order. Throws
// SizeMismatch.
std::vector<Violation> is_proper(const OrientedTree& t, const Coloring& c);

// Colors whose entire (nonempty) class lies inside N+(v), ascending.
std::vector<ColorId> dominated_classes(const OrientedTree& t, const Coloring& c, Vertex v);

// Sinks are exempt; every other vertex must dominate at least one class.
// Violations are exhaustive: improper arcs first, then undominated vertices.
Verification verify_dominator(const OrientedTree& t, const Coloring& c);

// Re-checks each witness claim from the coloring alone.
bool check_certificate(const OrientedTree& t, const DominatorCertificate& cert);

} // namespace domchrom
