#include "ffchol/census.hpp"

namespace ffchol {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

void enumerate_sym(const FieldPtr& field, int n,
                   const std::function<void(const SymMatrix&)>& visit,
                   std::int64_t budget, int shard_index, int shard_count) {
    const int q = field->q();
    const int cells = n * (n + 1) / 2;
    const std::int64_t total = ipow(q, cells);
    if (total > budget)
        throw DomainError("E_BUDGET_EXCEEDED",
                          "enumeration needs " + std::to_string(total) + " matrices, budget is " +
                              std::to_string(budget));
    if (shard_count < 1 || shard_index < 0 || shard_index >= shard_count)
        throw DomainError("E_PARSE", "invalid shard spec");

    // Shards slice the first row's code range.
    const std::int64_t row_span = ipow(q, n);
    const std::int64_t lo = row_span * shard_index / shard_count;
    const std::int64_t hi = row_span * (shard_index + 1) / shard_count;

    // Upper-triangle cells in row-major order; the last varies fastest.
    std::vector<std::pair<int, int>> cell;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            cell.emplace_back(i, j);

    std::vector<int> digits(cells, 0);
    Matrix m(field, n, n);
    const std::int64_t below_first_row = ipow(q, cells - n);
    for (std::int64_t code = 0; code < total; ++code) {
        if (shard_count > 1) {
            // cells 0..n-1 (the first row) are the most significant digits
            const std::int64_t first_row = code / below_first_row;
            if (first_row < lo || first_row >= hi) continue;
        }
        std::int64_t c = code;
        for (int t = cells - 1; t >= 0; --t) { digits[t] = static_cast<int>(c % q); c /= q; }
        for (int t = 0; t < cells; ++t) {
            m.at(cell[t].first, cell[t].second) = digits[t];
            m.at(cell[t].second, cell[t].first) = digits[t];
        }
        visit(SymMatrix(m));
    }
}

CensusReport census_shard(const FieldPtr& field, int n, int shard_index, int shard_count,
                          std::int64_t budget) {
    const Field& F = *field;
    const int q = F.q();
    CensusReport r;
    r.field = field;
    r.n = n;
    r.formula_value = ipow(q - 1, n) * ipow(q, n * (n - 1) / 2);

    enumerate_sym(field, n, [&](const SymMatrix& a) {
        ++r.total_sym;
        bool lpm = true;
        SignPattern e(n);
        for (int k = 1; k <= n && lpm; ++k) {
            const int m = leading_minor(a, k);
            if (m == 0) lpm = false;
            else e[k - 1] = F.p() == 2 ? 1 : F.chi(m);
        }
        if (lpm) {
            ++r.lpm_total;
            ++r.per_pattern[e];
        }
        if (in_tpm_cone(a)) ++r.tpm_total;
    }, budget, shard_index, shard_count);

    r.density = {r.lpm_total, r.total_sym};
    return r;
}

CensusReport merge_census(const CensusReport& a, const CensusReport& b) {
    if (!same_field(a.field, b.field) || a.n != b.n)
        throw DomainError("E_FIELD_MISMATCH", "cannot merge reports of different sweeps");
    CensusReport r = a;
    r.total_sym += b.total_sym;
    r.lpm_total += b.lpm_total;
    r.tpm_total += b.tpm_total;
    for (const auto& [e, c] : b.per_pattern) r.per_pattern[e] += c;
    r.density = {r.lpm_total, r.total_sym};
    return r;
}

void check_census(const CensusReport& r) {
    const Field& F = *r.field;
    const int q = F.q();
    auto fail = [&](const std::string& what) {
        throw DomainError("E_ASSERTION", what + " (field " + F.name() + ", n = " +
                                             std::to_string(r.n) + ")");
    };
    if (r.total_sym != ipow(q, r.n * (r.n + 1) / 2)) fail("symmetric-matrix total is off");
    if (r.lpm_total != r.formula_value)
        fail("lpm_total " + std::to_string(r.lpm_total) + " != formula " +
             std::to_string(r.formula_value));
    if (r.tpm_total != r.formula_value)
        fail("tpm_total " + std::to_string(r.tpm_total) + " != formula " +
             std::to_string(r.formula_value));
    if (q % 2 == 1) {
        const std::int64_t cones = std::int64_t(1) << r.n;
        if (static_cast<std::int64_t>(r.per_pattern.size()) != cones)
            fail("expected " + std::to_string(cones) + " nonempty cones, found " +
                 std::to_string(r.per_pattern.size()));
        for (const auto& [e, c] : r.per_pattern)
            if (c != r.formula_value / cones)
                fail("cone " + format_pattern(e) + " holds " + std::to_string(c) +
                     " members, expected " + std::to_string(r.formula_value / cones));
    } else {
        if (r.per_pattern.size() != 1 || r.per_pattern.begin()->second != r.formula_value)
            fail("even q must have a single cone equal to the formula count");
    }
    // density = (1 - 1/q)^n exactly: lpm_total * q^n == (q-1)^n * total_sym
    if (r.lpm_total * ipow(q, r.n) != ipow(q - 1, r.n) * r.total_sym)
        fail("density identity (1 - 1/q)^n violated");
}

CensusReport run_census(const FieldPtr& field, int n, std::int64_t budget) {
    CensusReport r = census_shard(field, n, 0, 1, budget);
    check_census(r);
    return r;
}

bool verify_extension_bijection(const Matrix& a, const std::vector<int>& u) {
    if (!a.is_square() || static_cast<int>(u.size()) != a.rows())
        throw DomainError("E_SIZE_MISMATCH", "border vector length must match the matrix");
    if (det(a) == 0) throw DomainError("E_SINGULAR", "inner matrix must be invertible");
    const FieldPtr& Fp = a.field();
    const int n = a.rows();
    Matrix b(Fp, n + 1, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) b.at(i, j) = a.at(i, j);
        b.at(i, n) = u[i];
        b.at(n, i) = u[i];
    }
    std::vector<bool> seen(Fp->q(), false);
    for (int x = 0; x < Fp->q(); ++x) {
        b.at(n, n) = x;
        const int d = det(b);
        if (seen[d]) return false;
        seen[d] = true;
    }
    return true;
}

}  // namespace ffchol
