#pragma once

#include <cstdint>
#include <vector>

#include "trapcong/report.hpp"

namespace trapcong {

enum class Scope { All, Section1, Section2, Section3, Section4 };

struct VerifyOptions {
    // classifier vs witness-oracle agreement range
    std::uint64_t equivalence_bound = 20000;
    // five-form family vs classifier complement range
    std::uint64_t star_complement_bound = 10000;
    // table reproduction k range
    std::uint64_t table_k_max = 1000;
    // closed-form grids
    std::uint64_t thm16_n_max = 50;
    std::uint64_t prop41_grid = 25;
    std::uint64_t nonintegral_n_max = 200;
    // counting ranges
    std::uint64_t f_x = 1000000;
    std::vector<std::uint64_t> g_xs = {1000, 10000, 100000, 1000000};
    std::size_t pell_want = 3;
};

// Deterministic reproduction of every checkable published claim in the
// chosen scope. Reports are ordered by claim id within each section.
std::vector<Report> verify_paper(Scope scope, const VerifyOptions& opt = {});

}  // namespace trapcong
