#include "regspec/blockinv.hpp"

#include <cmath>
#include <string>

#include "regspec/census.hpp"
#include "regspec/cheb.hpp"
#include "regspec/error.hpp"

namespace regspec {

namespace {

MatrixXc checked_inverse(const MatrixXc& m, const char* name) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidParameter, std::string("block ") + name + " is not square");
    }
    Eigen::PartialPivLU<MatrixXc> lu(m);
    if (!(lu.rcond() >= 1.0 / kMaxCondition)) {
        throw Error(ErrorKind::Singularity, std::string("block ") + name + " is singular");
    }
    return lu.inverse();
}

} // namespace

MatrixXc Block2x2::assemble() const {
    const auto n = a.rows();
    const auto m = d.rows();
    MatrixXc out(n + m, n + m);
    const MatrixXc bc = b.cast<std::complex<double>>();
    out.topLeftCorner(n, n) = a;
    out.topRightCorner(n, m) = bc;
    out.bottomLeftCorner(m, n) = bc.transpose();
    out.bottomRightCorner(m, m) = d;
    return out;
}

MatrixXc schur_inverse(const Block2x2& blk, SchurRoute route) {
    const auto n = blk.a.rows();
    const auto m = blk.d.rows();
    if (blk.b.rows() != n || blk.b.cols() != m) {
        throw Error(ErrorKind::InvalidParameter, "block B has the wrong shape");
    }
    const MatrixXc b = blk.b.cast<std::complex<double>>();
    const MatrixXc bt = b.transpose();
    MatrixXc out(n + m, n + m);

    if (route == SchurRoute::F) {
        const MatrixXc a_inv = checked_inverse(blk.a, "A");
        const MatrixXc a_inv_b = a_inv * b;
        const MatrixXc f_inv = checked_inverse(blk.d - bt * a_inv_b, "F");
        const MatrixXc upper_right = -a_inv_b * f_inv;
        out.topLeftCorner(n, n) = a_inv - upper_right * bt * a_inv;
        out.topRightCorner(n, m) = upper_right;
        out.bottomLeftCorner(m, n) = -f_inv * bt * a_inv;
        out.bottomRightCorner(m, m) = f_inv;
    } else {
        const MatrixXc d_inv = checked_inverse(blk.d, "D");
        const MatrixXc d_inv_bt = d_inv * bt;
        const MatrixXc g_inv = checked_inverse(blk.a - b * d_inv_bt, "G");
        const MatrixXc lower_left = -d_inv_bt * g_inv;
        out.topLeftCorner(n, n) = g_inv;
        out.topRightCorner(n, m) = -g_inv * b * d_inv;
        out.bottomLeftCorner(m, n) = lower_left;
        out.bottomRightCorner(m, m) = d_inv - lower_left * b * d_inv;
    }
    return out;
}

MatrixXc direct_inverse(const MatrixXc& m) { return checked_inverse(m, "M"); }

EpsilonEstimate epsilon_root_estimate(const Graph& g, Vertex root, std::size_t d,
                                      std::size_t zeta, std::complex<double> z, double c0) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidParameter, "degree must be >= 2");
    }
    if (!(z.imag() > 0.0)) {
        throw Error(ErrorKind::Precondition, "epsilon estimate needs Im z > 0");
    }
    if (root >= g.size()) {
        throw Error(ErrorKind::InvalidParameter, "root out of range");
    }
    if (!ball_is_acyclic(g, root, zeta + 1)) {
        throw Error(ErrorKind::Precondition,
                    "the (zeta+1)-neighborhood of the root contains a cycle");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d) - 1.0);
    const InducedBall tree = induced_ball(g, root, zeta);
    const auto full = resolvent_entry(g, scale, z, root, root);
    const auto local = resolvent_entry(tree.graph, scale, z, 0, 0);

    EpsilonEstimate out;
    out.epsilon = full - local;
    out.r = ellipse_radius(0.5 * z);
    const double zf = static_cast<double>(zeta);
    out.bound = (2.0 * c0 * c0 / (1.0 - std::pow(out.r, -2.0 * zf - 4.0))) *
                std::pow(out.r, -2.0 * zf - 2.0) / z.imag();
    out.within_bound = std::abs(out.epsilon) <= out.bound;
    return out;
}

} // namespace regspec
