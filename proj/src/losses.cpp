#include "automlc/losses.hpp"

#include <cstdint>
#include <numeric>

namespace automlc {

namespace {

void require_binary_pair(const Matrix& y_true, const Matrix& y_pred) {
    if (!y_true.same_shape(y_pred)) throw Error("ShapeMismatch", "loss arguments differ in shape");
    if (!y_true.all_binary() || !y_pred.all_binary())
        throw Error("NonBinaryEntry", "loss arguments must be 0/1 matrices");
}

double f1_term(double tp, double true_sum, double pred_sum) {
    double denom = true_sum + pred_sum;
    if (denom == 0.0) return 1.0; // empty vs empty counts as perfect agreement
    return 2.0 * tp / denom;
}

double subset01(const Matrix& y, const Matrix& yh) {
    double wrong = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            if (y(i, j) != yh(i, j)) {
                wrong += 1.0;
                break;
            }
        }
    }
    return wrong / static_cast<double>(y.rows());
}

double hamming(const Matrix& y, const Matrix& yh) {
    double wrong = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (y(i, j) != yh(i, j)) wrong += 1.0;
    return wrong / static_cast<double>(y.rows() * y.cols());
}

double f1_instance(const Matrix& y, const Matrix& yh) {
    double sum = 0.0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        double tp = 0, st = 0, sp = 0;
        for (std::size_t j = 0; j < y.cols(); ++j) {
            tp += y(i, j) * yh(i, j);
            st += y(i, j);
            sp += yh(i, j);
        }
        sum += f1_term(tp, st, sp);
    }
    return 1.0 - sum / static_cast<double>(y.rows());
}

double f1_label(const Matrix& y, const Matrix& yh) {
    double sum = 0.0;
    for (std::size_t j = 0; j < y.cols(); ++j) {
        double tp = 0, st = 0, sp = 0;
        for (std::size_t i = 0; i < y.rows(); ++i) {
            tp += y(i, j) * yh(i, j);
            st += y(i, j);
            sp += yh(i, j);
        }
        sum += f1_term(tp, st, sp);
    }
    return 1.0 - sum / static_cast<double>(y.cols());
}

double f1_micro(const Matrix& y, const Matrix& yh) {
    double tp = 0, st = 0, sp = 0;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t j = 0; j < y.cols(); ++j) {
            tp += y(i, j) * yh(i, j);
            st += y(i, j);
            sp += yh(i, j);
        }
    }
    return 1.0 - f1_term(tp, st, sp);
}

double binomial(int n, int r) {
    if (r < 0 || r > n) return 0.0;
    r = std::min(r, n - r);
    double acc = 1.0;
    for (int i = 1; i <= r; ++i) acc = acc * static_cast<double>(n - r + i) / static_cast<double>(i);
    return acc;
}

} // namespace

Loss parse_loss(const std::string& name) {
    if (name == "hamming") return Loss::hamming();
    if (name == "subset01") return Loss::subset01();
    if (name == "f1i" || name == "f1_instance") return Loss::f1_instance();
    if (name == "f1l" || name == "f1_label") return Loss::f1_label();
    if (name == "f1micro" || name == "f1_micro") return Loss::f1_micro();
    if (name.rfind("subset-k:", 0) == 0) {
        int k = std::stoi(name.substr(9));
        return Loss::subset_k(k);
    }
    throw Error("UnknownLoss", "unrecognized loss name '" + name + "'");
}

std::string loss_name(const Loss& loss) {
    switch (loss.kind) {
        case LossKind::SubsetZeroOne: return "subset01";
        case LossKind::Hamming: return "hamming";
        case LossKind::F1Instance: return "f1_instance";
        case LossKind::F1Label: return "f1_label";
        case LossKind::F1Micro: return "f1_micro";
        case LossKind::SubsetK: return "subset-k:" + std::to_string(loss.k);
    }
    return "?";
}

Matrix threshold_scores(const Matrix& scores, double tau) {
    Matrix hard(scores.rows(), scores.cols());
    for (std::size_t i = 0; i < scores.rows(); ++i) {
        for (std::size_t j = 0; j < scores.cols(); ++j) {
            double s = scores(i, j);
            if (s < 0.0 || s > 1.0)
                throw Error("OutOfRangeScore", "score outside [0,1] at (" + std::to_string(i) +
                                                   "," + std::to_string(j) + ")");
            hard(i, j) = s >= tau ? 1.0 : 0.0;
        }
    }
    return hard;
}

double compute_loss(const Loss& loss, const Matrix& y_true, const Matrix& y_pred) {
    require_binary_pair(y_true, y_pred);
    switch (loss.kind) {
        case LossKind::SubsetZeroOne: return subset01(y_true, y_pred);
        case LossKind::Hamming: return hamming(y_true, y_pred);
        case LossKind::F1Instance: return f1_instance(y_true, y_pred);
        case LossKind::F1Label: return f1_label(y_true, y_pred);
        case LossKind::F1Micro: return f1_micro(y_true, y_pred);
        case LossKind::SubsetK: return subset_k_loss(y_true, y_pred, loss.k);
    }
    throw Error("UnknownLoss", "bad loss kind");
}

double compute_loss(LossKind kind, const Matrix& y_true, const Matrix& y_pred) {
    return compute_loss(Loss{kind, 1}, y_true, y_pred);
}

double subset_k_loss(const Matrix& y_true, const Matrix& y_pred, int k) {
    require_binary_pair(y_true, y_pred);
    const int m = static_cast<int>(y_true.cols());
    if (k < 1 || k > m) throw Error("KOutOfRange", "k must be in [1, m]");

    const std::size_t S = y_true.rows();
    double total = 0.0;
    if (m <= 20) {
        // Enumerate all size-k subsets as bitmasks (Gosper's hack); a subset
        // mismatches iff it contains at least one differing label.
        const std::uint32_t limit = 1u << m;
        double n_subsets = binomial(m, k);
        for (std::size_t i = 0; i < S; ++i) {
            std::uint32_t diff = 0;
            for (int j = 0; j < m; ++j)
                if (y_true(i, j) != y_pred(i, j)) diff |= (1u << j);
            double bad = 0.0;
            std::uint32_t t = (1u << k) - 1;
            while (t < limit) {
                if (t & diff) bad += 1.0;
                std::uint32_t c = t & -t;
                std::uint32_t r = t + c;
                t = (((r ^ t) >> 2) / c) | r;
                if (c == 0) break;
            }
            total += bad / n_subsets;
        }
    } else {
        for (std::size_t i = 0; i < S; ++i) {
            int e = 0;
            for (int j = 0; j < m; ++j)
                if (y_true(i, j) != y_pred(i, j)) ++e;
            total += 1.0 - binomial(m - e, k) / binomial(m, k);
        }
    }
    return total / static_cast<double>(S);
}

} // namespace automlc
