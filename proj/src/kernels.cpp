#include "crankmex/kernels.hpp"

#include <vector>

namespace crankmex::kernels {

namespace {

// Univariate truncated product accumulated into out; zero terms skipped.
void q_mul_acc(const BigInt* a, const BigInt* b, BigInt* out, int qmax)
{
    for (int i = 0; i <= qmax; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (int j = 0; i + j <= qmax; ++j) {
            if (sgn(b[j]) == 0)
                continue;
            mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
        }
    }
}

void zq_row(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out, int qmax,
            int k)
{
    const std::size_t w = static_cast<std::size_t>(qmax) + 1;
    for (int i = 0; i <= k; ++i)
        q_mul_acc(a.data() + i * w, b.data() + (k - i) * w, out.data() + k * w, qmax);
}

// Lowest q-degree with a nonzero coefficient in each y row, qmax+1 if none.
std::vector<int> row_valuations(std::span<const BigInt> s, int rows, int qmax)
{
    std::vector<int> v(rows, qmax + 1);
    const std::size_t w = static_cast<std::size_t>(qmax) + 1;
    for (int r = 0; r < rows; ++r)
        for (int n = 0; n <= qmax; ++n)
            if (sgn(s[r * w + n]) != 0) {
                v[r] = n;
                break;
            }
    return v;
}

bool yq_window_ok(const std::vector<int>& va, const std::vector<int>& vb, int qmax)
{
    const int rows = 2 * qmax + 1;
    for (int r1 = 0; r1 < rows; ++r1) {
        if (va[r1] > qmax)
            continue;
        for (int r2 = 0; r2 < rows; ++r2) {
            const int c = (r1 - qmax) + (r2 - qmax);
            if ((c < -qmax || c > qmax) && va[r1] + vb[r2] <= qmax)
                return false;
        }
    }
    return true;
}

void yq_row(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out, int qmax,
            const std::vector<int>& va, const std::vector<int>& vb, int r)
{
    const int rows = 2 * qmax + 1;
    const std::size_t w = static_cast<std::size_t>(qmax) + 1;
    const int c = r - qmax;
    for (int r1 = 0; r1 < rows; ++r1) {
        const int r2 = c - (r1 - qmax) + qmax;
        if (r2 < 0 || r2 >= rows || va[r1] + vb[r2] > qmax)
            continue;
        q_mul_acc(a.data() + r1 * w, b.data() + r2 * w, out.data() + r * w, qmax);
    }
}

}  // namespace

void q_mul(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out)
{
    q_mul_acc(a.data(), b.data(), out.data(), static_cast<int>(out.size()) - 1);
}

void zq_mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                   int zmax, int qmax)
{
    for (int k = 0; k <= zmax; ++k)
        zq_row(a, b, out, qmax, k);
}

void zq_mul_omp(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                int zmax, int qmax)
{
    // row k costs ~k+1 univariate products; hand out the heavy rows first
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i <= zmax; ++i)
        zq_row(a, b, out, qmax, zmax - i);
}

bool yq_mul_serial(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                   int qmax)
{
    const int rows = 2 * qmax + 1;
    const auto va = row_valuations(a, rows, qmax);
    const auto vb = row_valuations(b, rows, qmax);
    if (!yq_window_ok(va, vb, qmax))
        return false;
    for (int r = 0; r < rows; ++r)
        yq_row(a, b, out, qmax, va, vb, r);
    return true;
}

bool yq_mul_omp(std::span<const BigInt> a, std::span<const BigInt> b, std::span<BigInt> out,
                int qmax)
{
    const int rows = 2 * qmax + 1;
    const auto va = row_valuations(a, rows, qmax);
    const auto vb = row_valuations(b, rows, qmax);
    if (!yq_window_ok(va, vb, qmax))
        return false;
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < rows; ++r)
        yq_row(a, b, out, qmax, va, vb, r);
    return true;
}

}  // namespace crankmex::kernels
