#pragma once

#include <algorithm>
#include <cstdint>
#include <string_view>
#include <type_traits>
#include <vector>

namespace mslkit {
namespace detail {

/// Suffix array by induced sorting (SA-IS), O(n) time.
/// \tparam Int signed index type wide enough for n
/// \param s symbols, each in [0, upper]
template<typename Int>
std::vector<Int> sa_is(const std::vector<Int>& s, Int upper) {
    static_assert(std::is_signed_v<Int>);
    const Int n = static_cast<Int>(s.size());
    if(n == 0) return {};
    if(n == 1) return {0};
    if(n == 2) return s[0] < s[1] ? std::vector<Int>{0, 1} : std::vector<Int>{1, 0};

    std::vector<Int> sa(n);
    // ls[i]: suffix i is S-type (smaller than suffix i+1)
    std::vector<bool> ls(n);
    for(Int i = n - 2; i >= 0; --i) {
        ls[i] = (s[i] == s[i + 1]) ? ls[i + 1] : (s[i] < s[i + 1]);
    }

    // bucket boundaries: sum_l[c] = start of c's bucket, sum_s[c] = start of c's S-part
    std::vector<Int> sum_l(upper + 1), sum_s(upper + 1);
    for(Int i = 0; i < n; ++i) {
        if(!ls[i]) {
            sum_s[s[i]]++;
        } else {
            sum_l[s[i] + 1]++;
        }
    }
    for(Int c = 0; c <= upper; ++c) {
        sum_s[c] += sum_l[c];
        if(c < upper) sum_l[c + 1] += sum_s[c];
    }

    auto induce = [&](const std::vector<Int>& lms) {
        std::fill(sa.begin(), sa.end(), Int(-1));
        std::vector<Int> buf(upper + 1);
        std::copy(sum_s.begin(), sum_s.end(), buf.begin());
        for(Int d : lms) {
            if(d == n) continue;
            sa[buf[s[d]]++] = d;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        sa[buf[s[n - 1]]++] = n - 1;
        for(Int i = 0; i < n; ++i) {
            const Int v = sa[i];
            if(v >= 1 && !ls[v - 1]) sa[buf[s[v - 1]]++] = v - 1;
        }
        std::copy(sum_l.begin(), sum_l.end(), buf.begin());
        for(Int i = n - 1; i >= 0; --i) {
            const Int v = sa[i];
            if(v >= 1 && ls[v - 1]) sa[--buf[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<Int> lms_map(n + 1, -1);
    Int m = 0;
    for(Int i = 1; i < n; ++i) {
        if(!ls[i - 1] && ls[i]) lms_map[i] = m++;
    }
    std::vector<Int> lms;
    lms.reserve(m);
    for(Int i = 1; i < n; ++i) {
        if(!ls[i - 1] && ls[i]) lms.push_back(i);
    }

    induce(lms);

    if(m) {
        std::vector<Int> sorted_lms;
        sorted_lms.reserve(m);
        for(Int v : sa) {
            if(lms_map[v] != -1) sorted_lms.push_back(v);
        }
        // name LMS substrings; equal substrings share a name
        std::vector<Int> rec_s(m);
        Int rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for(Int i = 1; i < m; ++i) {
            Int l = sorted_lms[i - 1], r = sorted_lms[i];
            const Int end_l = (lms_map[l] + 1 < m) ? lms[lms_map[l] + 1] : n;
            const Int end_r = (lms_map[r] + 1 < m) ? lms[lms_map[r] + 1] : n;
            bool same = true;
            if(end_l - l != end_r - r) {
                same = false;
            } else {
                while(l < end_l) {
                    if(s[l] != s[r]) break;
                    ++l;
                    ++r;
                }
                if(l == n || s[l] != s[r]) same = false;
            }
            if(!same) ++rec_upper;
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }

        const auto rec_sa = sa_is<Int>(rec_s, rec_upper);
        for(Int i = 0; i < m; ++i) sorted_lms[i] = lms[rec_sa[i]];
        induce(sorted_lms);
    }
    return sa;
}

/// Suffix array of a byte string.
template<typename Int>
std::vector<Int> suffix_array_bytes(std::string_view bytes) {
    std::vector<Int> s(bytes.size());
    for(std::size_t i = 0; i < bytes.size(); ++i) s[i] = static_cast<unsigned char>(bytes[i]);
    return sa_is<Int>(s, Int(255));
}

} // namespace detail
} // namespace mslkit
