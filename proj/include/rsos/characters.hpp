#pragma once

#include <vector>

#include "rsos/model.hpp"
#include "rsos/qseries.hpp"

namespace rsos {

// r = floor(pc/pp) + (b-c+1)/2
int ground_state_r(int p, int pp, int b, int c);

QuarterPoly bosonic(int p, int pp, int a, int b, int c, int L);
// the infinite character expanded to degree N
QuarterPoly rocha_caridi_truncated(int p, int pp, int r, int s, long N);

struct GammaStep {
    long alpha2 = 0;  // alpha''_j
    long beta1 = 0;   // beta'_j
    long gamma2 = 0;  // gamma''_j
};

// Vectors u, delta and Q-adjacent data are indexed by j = 0..t; component 0 is always zero.
struct FermionicSystem {
    TakahashiData tak;
    int a = 0;
    int b = 0;
    TakMember member_L;
    TakMember member_R;
    int k_L = 0;  // zone holding sigma_L
    int k_R = 0;
    std::vector<long> u_L, u_R, delta_L, delta_R;
    std::vector<long> u;  // u_L + u_R
    std::vector<std::vector<long>> C;      // t x t, indices 0..t-1
    std::vector<std::vector<long>> C_hat;  // row r holds row r+1 of the extended C
    std::vector<int> Q;                    // Q_0..Q_{t-1}
    std::vector<long> alpha, beta, gamma_seq;  // alpha_j, beta_j, gamma_j for j = 0..t
    std::vector<GammaStep> steps;              // index j = 0..t-1
    long gamma = 0;                            // gamma_0

    int t() const { return tak.t; }
};

// throws std::invalid_argument when a or b lies outside T and T'
FermionicSystem build_system(int p, int pp, int a, int b, TakPreference pref = TakPreference::PreferT);

enum class Mask { Flat, Sharp };
// keeps components 1..t-1 whose zone is odd (Flat) or even (Sharp); the rest become zero
std::vector<long> flat_sharp(const TakahashiData& tak, const std::vector<long>& u, Mask mask);

struct CChoice {
    int c = 0;
    bool ambiguous = false;  // b is interfacial and b-1 would serve equally well
};
CChoice c_from_b(int p, int pp, int b);

enum class FermionicForm { Classical, Modified };

struct MnSolution {
    std::vector<long> m_hat;  // L, m_1..m_{t-1}
    std::vector<long> n;      // n_1..n_t stored at index j-1
};

// Classical: every n_j >= 0. Modified additionally admits n_j = -1 where m_j = 0.
std::vector<MnSolution> mn_solutions(const FermionicSystem& sys, int L,
                                     FermionicForm form = FermionicForm::Classical);

struct FermionicTerm {
    MnSolution sol;
    QuarterPoly value;
};
std::vector<FermionicTerm> fermionic_terms(const FermionicSystem& sys, int L, FermionicForm form);

enum class TailBranch { Below, Above, None };
TailBranch tail_branch(const TakahashiData& tak, int a, int b);

QuarterPoly fermionic_classical(int p, int pp, int a, int b, int L, TakPreference pref = TakPreference::PreferT);
QuarterPoly fermionic_modified(int p, int pp, int a, int b, int L, TakPreference pref = TakPreference::PreferT);

}  // namespace rsos
