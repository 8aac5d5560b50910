#pragma once

#include <string>

#include "automlc/matrix.hpp"

namespace automlc {

/// Multi-label loss families. The F1 kinds are reported as 1 - F1 so that
/// every kind is a minimization target in [0, 1].
enum class LossKind {
    SubsetZeroOne,
    Hamming,
    F1Instance,
    F1Label,
    F1Micro,
    SubsetK,
};

/// A loss selection; `k` is only meaningful for SubsetK (size of the label
/// subsets whose subset-0/1 indicators are averaged).
struct Loss {
    LossKind kind = LossKind::Hamming;
    int k = 1;

    static Loss subset01() { return {LossKind::SubsetZeroOne, 0}; }
    static Loss hamming() { return {LossKind::Hamming, 0}; }
    static Loss f1_instance() { return {LossKind::F1Instance, 0}; }
    static Loss f1_label() { return {LossKind::F1Label, 0}; }
    static Loss f1_micro() { return {LossKind::F1Micro, 0}; }
    static Loss subset_k(int k) { return {LossKind::SubsetK, k}; }
};

/// Parse/format the CLI spellings: hamming, subset01, f1i, f1l, f1micro, subset-k:K.
Loss parse_loss(const std::string& name);
std::string loss_name(const Loss& loss);

/// Turn scores in [0,1] into a 0/1 matrix; entries >= tau map to 1 (ties at tau -> 1).
Matrix threshold_scores(const Matrix& scores, double tau);

/// Evaluate a loss on two binary matrices of identical shape. F1 terms with an
/// empty denominator (both sides empty) count as F1 = 1, so every loss is 0 iff
/// the matrices are equal.
double compute_loss(const Loss& loss, const Matrix& y_true, const Matrix& y_pred);
double compute_loss(LossKind kind, const Matrix& y_true, const Matrix& y_pred);

/// Average subset-0/1 indicator over all (m choose k) label subsets of size k,
/// averaged over instances. k=1 equals Hamming, k=m equals subset 0/1.
/// Enumerates subsets for m <= 20; uses the combinatorial closed form
/// 1 - C(m-e, k)/C(m, k) per instance (e = entry mismatches) for larger m.
double subset_k_loss(const Matrix& y_true, const Matrix& y_pred, int k);

} // namespace automlc
