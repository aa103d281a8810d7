#include "decmon/partition.hpp"

#include <stdexcept>

namespace decmon {

Partition young_partition(const Monomial& g) {
    int m = g.var_count();
    int d = g.degree();
    Partition out;
    out.rows = d;
    out.width = m - d;
    // lambda_k = i_k - (k-1), reported largest part first; zero parts dropped.
    std::vector<int> idx = g.indices();
    for (int k = d; k >= 1; --k) {
        int part = idx[k - 1] - (k - 1);
        if (part > 0) out.parts.push_back(part);
    }
    return out;
}

Monomial monomial_from_partition(int m, const Partition& lambda) {
    int d = lambda.rows;
    if (d < 0 || d > m)
        throw std::invalid_argument("partition grid does not fit in m variables");
    if (lambda.width != m - d)
        throw std::invalid_argument("partition grid width must be m - rows");
    if (static_cast<int>(lambda.parts.size()) > d)
        throw std::invalid_argument("partition has more parts than grid rows");
    for (size_t i = 0; i < lambda.parts.size(); ++i) {
        if (lambda.parts[i] < 0 || lambda.parts[i] > lambda.width)
            throw std::invalid_argument("partition part exceeds grid width");
        if (i + 1 < lambda.parts.size() && lambda.parts[i] < lambda.parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    // parts are stored largest first: parts[0] = lambda_d ... ; pad with zeros.
    std::vector<int> indices;
    for (int k = 1; k <= d; ++k) {
        int from_top = d - k;  // 0-based position of lambda_k in parts
        int part = from_top < static_cast<int>(lambda.parts.size()) ? lambda.parts[from_top] : 0;
        indices.push_back(part + (k - 1));
    }
    return Monomial::from_indices(m, indices);
}

int young_size(const Monomial& g) {
    return young_partition(g).size();
}

BigInt gaussian_binomial(int m, int r) {
    if (r < 0 || m < 0 || r > m)
        throw std::invalid_argument("gaussian binomial requires 0 <= r <= m");
    BigInt num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= pow2(m) - pow2(i);
        den *= pow2(r) - pow2(i);
    }
    return num / den;  // exact: den always divides num
}

}  // namespace decmon
