// SPDX-License-Identifier: Apache-2.0
#include "maglap/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "maglap/angle.hpp"
#include "maglap/cost_guard.hpp"
#include "maglap/error.hpp"
#include "parallel.hpp"

namespace maglap {

namespace {

std::string layer_id(const std::string& id, long layer) { return id + "@" + std::to_string(layer); }

void validate_face(const MwGraph& g, const std::vector<Eigen::VectorXi>& index, int d, const Face& face) {
    if (face.steps.empty()) throw InvalidInput("invalid_face", "face '" + face.id + "' has no arcs");
    std::size_t start = 0;
    std::size_t current = 0;
    Eigen::VectorXi offset = Eigen::VectorXi::Zero(d);
    for (std::size_t i = 0; i < face.steps.size(); ++i) {
        const FaceStep& step = face.steps[i];
        if (step.sign != 1 && step.sign != -1)
            throw InvalidInput("invalid_face", "face '" + face.id + "': sign must be +1 or -1");
        const std::size_t ai = g.arc_index(step.arc);
        const Arc& a = g.arc(ai);
        const std::size_t from = step.sign > 0 ? a.tail : a.head;
        if (i == 0) {
            start = from;
        } else if (from != current) {
            throw InvalidInput("invalid_face", "face '" + face.id + "' is not a walk at arc '" + step.arc + "'");
        }
        current = step.sign > 0 ? a.head : a.tail;
        offset += step.sign * index[ai];
    }
    if (current != start || !offset.isZero())
        throw InvalidInput("invalid_face", "face '" + face.id + "' does not close up in the cover");
}

BandStructure sample_bands(const PeriodicGraph& p, std::size_t grid) {
    const MwGraph& q = p.quotient();
    const auto n = static_cast<Eigen::Index>(q.vertex_count());
    const int d = p.rank();
    const double points = std::pow(static_cast<double>(grid), d);
    const double nd = static_cast<double>(n);
    check_cost(points * nd * nd * nd, "band_structure");

    BandStructure bs;
    bs.grid = grid;
    const auto count = static_cast<Eigen::Index>(points);
    bs.theta_grid.resize(count, d);
    for (Eigen::Index r = 0; r < count; ++r) {
        auto rest = static_cast<std::size_t>(r);
        for (int j = d - 1; j >= 0; --j) {
            bs.theta_grid(r, j) = kTwoPi * static_cast<double>(rest % grid) / static_cast<double>(grid);
            rest /= grid;
        }
    }
    bs.bands.resize(count, n);
    detail::parallel_for(static_cast<std::size_t>(count), [&](std::size_t r) {
        const auto row = static_cast<Eigen::Index>(r);
        const Eigen::VectorXd theta = bs.theta_grid.row(row).transpose();
        bs.bands.row(row) = fiber_spectrum(p, theta).values.transpose();
    });

    bs.ambient_max = 2.0 * rho_infinity(q);
    for (Eigen::Index k = 0; k < n; ++k) bs.band_intervals.push_back({bs.bands.col(k).minCoeff(), bs.bands.col(k).maxCoeff()});
    bs.covered = merge_intervals(bs.band_intervals);
    bs.gaps = complement(bs.covered, 0.0, bs.ambient_max);
    bs.resolution_bound = resolution_bound(p, grid);
    return bs;
}

double endpoint_shift(const BandStructure& a, const BandStructure& b) {
    double shift = 0.0;
    for (std::size_t k = 0; k < a.band_intervals.size(); ++k) {
        shift = std::max(shift, std::abs(a.band_intervals[k].lo - b.band_intervals[k].lo));
        shift = std::max(shift, std::abs(a.band_intervals[k].hi - b.band_intervals[k].hi));
    }
    return shift;
}

}  // namespace

bool generates_lattice(const std::vector<Eigen::VectorXi>& vectors, int d) {
    std::vector<std::vector<long long>> m;
    for (const Eigen::VectorXi& v : vectors) {
        if (v.size() != d) return false;
        m.emplace_back(v.data(), v.data() + d);
    }
    std::size_t row = 0;
    for (int c = 0; c < d; ++c) {
        while (true) {
            std::size_t best = m.size();
            for (std::size_t r = row; r < m.size(); ++r)
                if (m[r][c] != 0 && (best == m.size() || std::llabs(m[r][c]) < std::llabs(m[best][c]))) best = r;
            if (best == m.size()) return false;
            std::swap(m[row], m[best]);
            bool reduced = true;
            for (std::size_t r = row + 1; r < m.size(); ++r) {
                const long long factor = m[r][c] / m[row][c];
                for (int j = c; j < d; ++j) m[r][j] -= factor * m[row][j];
                if (m[r][c] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (std::llabs(m[row][c]) != 1) return false;
        ++row;
    }
    return true;
}

PeriodicGraph::PeriodicGraph(MwGraph quotient, std::vector<Eigen::VectorXi> index,
                             std::optional<std::vector<Face>> faces)
    : quotient_(std::move(quotient)), index_(std::move(index)), faces_(std::move(faces)) {
    if (quotient_.vertex_count() == 0 || !is_connected(quotient_))
        throw InvalidInput("disconnected_graph", "the quotient of a periodic graph must be connected");
    if (index_.size() != quotient_.arc_count())
        throw InvalidInput("invalid_index", "expected one index vector per arc");
    if (index_.empty()) throw InvalidInput("invalid_index", "a periodic graph needs at least one arc");
    rank_ = static_cast<int>(index_.front().size());
    if (rank_ < 1) throw InvalidInput("invalid_index", "group rank must be at least 1");
    for (std::size_t i = 0; i < index_.size(); ++i) {
        if (index_[i].size() != rank_)
            throw InvalidInput("invalid_index", "index of arc '" + quotient_.arc(i).id + "' has the wrong length");
    }
    if (!generates_lattice(index_, rank_))
        throw InvalidInput("invalid_index", "arc indices do not generate Z^" + std::to_string(rank_));
    if (faces_) {
        for (const Face& f : *faces_) validate_face(quotient_, index_, rank_, f);
    }
}

PeriodicGraph PeriodicGraph::with_potential(const Eigen::VectorXd& beta) const {
    return PeriodicGraph(quotient_.with_alpha(beta), index_, faces_);
}

bool PeriodicGraph::operator==(const PeriodicGraph& other) const {
    if (!(quotient_ == other.quotient_) || faces_ != other.faces_ || index_.size() != other.index_.size()) return false;
    for (std::size_t i = 0; i < index_.size(); ++i)
        if (index_[i] != other.index_[i]) return false;
    return true;
}

IdSet connecting_arc_classes(const PeriodicGraph& p) {
    IdSet out;
    for (std::size_t i = 0; i < p.index().size(); ++i)
        if (!p.index(i).isZero()) out.insert(p.quotient().arc(i).id);
    return out;
}

MwGraph fiber_potential(const PeriodicGraph& p, const Eigen::VectorXd& theta) {
    if (theta.size() != p.rank())
        throw InvalidInput("theta has " + std::to_string(theta.size()) + " components, expected " +
                           std::to_string(p.rank()));
    Eigen::VectorXd alpha = p.quotient().alpha();
    for (std::size_t i = 0; i < p.index().size(); ++i) {
        const auto e = static_cast<Eigen::Index>(i);
        alpha[e] = reduce_angle(alpha[e] + theta.dot(p.index(i).cast<double>()));
    }
    return p.quotient().with_alpha(alpha);
}

Spectrum fiber_spectrum(const PeriodicGraph& p, const Eigen::VectorXd& theta) {
    return spectrum_of(fiber_potential(p, theta));
}

double resolution_bound(const PeriodicGraph& p, std::size_t grid) {
    double total = 0.0;
    for (std::size_t i = 0; i < p.index().size(); ++i) {
        const double c = arc_coupling(p.quotient(), p.quotient().arc(i));
        total += c * p.index(i).cwiseAbs().cast<double>().sum();
    }
    return total * std::numbers::pi / static_cast<double>(grid);
}

BandStructure band_structure(const PeriodicGraph& p, std::size_t grid, const BandOptions& options) {
    if (grid < 2) throw InvalidInput("band structure needs at least 2 grid points per dimension");
    BandStructure current = sample_bands(p, grid);
    if (!options.refine_tol) return current;
    for (int i = 0; i < options.max_doublings; ++i) {
        BandStructure next = sample_bands(p, current.grid * 2);
        const double shift = endpoint_shift(current, next);
        current = std::move(next);
        if (shift < *options.refine_tol) break;
    }
    return current;
}

Bracketing covering_bracketing(const PeriodicGraph& p, const std::optional<IdSet>& v0, const std::optional<IdSet>& e0) {
    const IdSet connecting = connecting_arc_classes(p);
    const IdSet arcs = e0.value_or(connecting);
    if (!std::includes(arcs.begin(), arcs.end(), connecting.begin(), connecting.end()))
        throw InvalidInput("missing_connecting_arcs", "virtualized arcs must include every connecting arc");
    const IdSet vertices = v0 ? *v0 : minimal_neighborhood(p.quotient(), arcs);
    return bracketing(p.quotient(), arcs, vertices);
}

FluxDiagram flux_sweep(const FluxFamily& family, std::size_t s_grid, std::size_t theta_grid) {
    if (s_grid < 1) throw InvalidInput("flux sweep needs at least one flux value");
    FluxDiagram diagram;
    for (std::size_t j = 0; j < s_grid; ++j) {
        const double s = kTwoPi * static_cast<double>(j) / static_cast<double>(s_grid);
        const BandStructure bs = band_structure(family(s), theta_grid);
        diagram.rows.push_back({s, bs.band_intervals, bs.gaps});
        diagram.ambient_max = std::max(diagram.ambient_max, bs.ambient_max);
    }
    return diagram;
}

MwGraph unfold_truncation(const PeriodicGraph& p, std::size_t radius) {
    if (p.rank() != 1) throw InvalidInput("unsupported_rank", "truncation is only available for Z-periodic graphs");
    const MwGraph& q = p.quotient();
    const long r = static_cast<long>(radius);
    std::vector<Vertex> vertices;
    for (long j = -r; j <= r; ++j)
        for (const Vertex& v : q.vertices()) vertices.push_back({layer_id(v.id, j), v.weight});
    std::vector<ArcSpec> arcs;
    for (long j = -r; j <= r; ++j) {
        for (std::size_t i = 0; i < q.arc_count(); ++i) {
            const Arc& a = q.arc(i);
            const long head_layer = j + p.index(i)[0];
            if (head_layer < -r || head_layer > r) continue;
            arcs.push_back({layer_id(a.id, j), layer_id(q.vertex(a.tail).id, j), layer_id(q.vertex(a.head).id, head_layer),
                            a.weight, a.alpha});
        }
    }
    return MwGraph(std::move(vertices), arcs);
}

std::vector<Face> lift_faces(const PeriodicGraph& p, std::size_t radius) {
    if (p.rank() != 1) throw InvalidInput("unsupported_rank", "truncation is only available for Z-periodic graphs");
    if (!p.faces()) throw InvalidInput("missing_faces", "periodic graph carries no face metadata");
    const long r = static_cast<long>(radius);
    std::vector<Face> out;
    for (const Face& face : *p.faces()) {
        for (long start = -r; start <= r; ++start) {
            Face lifted{layer_id(face.id, start), {}};
            long layer = start;
            bool inside = true;
            for (const FaceStep& step : face.steps) {
                const long ind = p.index(p.quotient().arc_index(step.arc))[0];
                const long tail_layer = step.sign > 0 ? layer : layer - ind;
                const long head_layer = tail_layer + ind;
                if (std::max(std::labs(tail_layer), std::labs(head_layer)) > r) {
                    inside = false;
                    break;
                }
                lifted.steps.push_back({layer_id(step.arc, tail_layer), step.sign});
                layer = step.sign > 0 ? head_layer : tail_layer;
            }
            if (inside) out.push_back(std::move(lifted));
        }
    }
    return out;
}

double face_flux(const MwGraph& g, const Face& face) {
    double flux = 0.0;
    for (const FaceStep& step : face.steps) flux += step.sign * g.arc(g.arc_index(step.arc)).alpha;
    return reduce_angle(flux);
}

}  // namespace maglap
