#include "gsp4/golden.hpp"

#include "gsp4/hecke.hpp"
#include "gsp4/padic_symplectic.hpp"

namespace gsp4 {

const std::vector<GoldenTransform>& golden_transforms() {
  static const std::vector<GoldenTransform> items{
      {"tau_0_0", "tau(0,0)",
        "1"},
      {"tau_1_2", "tau(1,2)",
        "p^{2} Y Z^{2} + p^{2} Y + p^{2} + p^{2} Y^{-1} - 1 + p^{2} Y^{-1} Z^{-2}"},
      {"tau_0_2", "tau(0,2)",
        "p^{3} Y^{2} Z^{2} + p^{3} Y Z^{2} + p^{3} Z^{2} - p^{2} Y Z^{2} + p^{3} Y + 2 p^{3} - p^{2} Y + p^{3"
        "} Y^{-1} - 2 p^{2} + p^{3} Z^{-2} - p^{2} Y^{-1} + p^{3} Y^{-1} Z^{-2} + p^{3} Y^{-2} Z^{-2} - p^{2}"
        " Y^{-1} Z^{-2}"},
      {"tau_0_4", "tau(0,4)",
        "p^{6} Y^{4} Z^{4} + p^{6} Y^{3} Z^{4} + p^{6} Y^{2} Z^{4} - p^{5} Y^{3} Z^{4} + p^{6} Y^{3} Z^{2} + "
        "p^{6} Y Z^{4} - p^{5} Y^{2} Z^{4} + 2 p^{6} Y^{2} Z^{2} - p^{5} Y^{3} Z^{2} + p^{6} Z^{4} - p^{5} Y "
        "Z^{4} + 2 p^{6} Y Z^{2} - 3 p^{5} Y^{2} Z^{2} + p^{6} Y^{2} + 2 p^{6} Z^{2} - 4 p^{5} Y Z^{2} + p^{4"
        "} Y^{2} Z^{2} + 2 p^{6} Y - p^{5} Y^{2} + p^{6} Y^{-1} Z^{2} - 3 p^{5} Z^{2} + 2 p^{4} Y Z^{2} + 3 p"
        "^{6} - 4 p^{5} Y - p^{5} Y^{-1} Z^{2} + p^{4} Z^{2} + p^{6} Y Z^{-2} + 2 p^{6} Y^{-1} - 5 p^{5} + 2 "
        "p^{4} Y + 2 p^{6} Z^{-2} - p^{5} Y Z^{-2} + p^{6} Y^{-2} - 4 p^{5} Y^{-1} + 3 p^{4} + 2 p^{6} Y^{-1}"
        " Z^{-2} - 3 p^{5} Z^{-2} - p^{5} Y^{-2} + 2 p^{4} Y^{-1} - p^{3} + p^{6} Z^{-4} + 2 p^{6} Y^{-2} Z^{"
        "-2} - 4 p^{5} Y^{-1} Z^{-2} + p^{4} Z^{-2} + p^{6} Y^{-1} Z^{-4} + p^{6} Y^{-3} Z^{-2} - 3 p^{5} Y^{"
        "-2} Z^{-2} + 2 p^{4} Y^{-1} Z^{-2} + p^{6} Y^{-2} Z^{-4} - p^{5} Y^{-1} Z^{-4} - p^{5} Y^{-3} Z^{-2}"
        " + p^{4} Y^{-2} Z^{-2} + p^{6} Y^{-3} Z^{-4} - p^{5} Y^{-2} Z^{-4} + p^{6} Y^{-4} Z^{-4} - p^{5} Y^{"
        "-3} Z^{-4}"},
      {"tau_1_4", "tau(1,4)",
        "p^{5} Y^{3} Z^{4} + p^{5} Y^{2} Z^{4} + p^{5} Y^{3} Z^{2} + p^{5} Y Z^{4} - p^{4} Y^{2} Z^{4} + 2 p^"
        "{5} Y^{2} Z^{2} + 3 p^{5} Y Z^{2} - 2 p^{4} Y^{2} Z^{2} + p^{5} Y^{2} + 2 p^{5} Z^{2} - 3 p^{4} Y Z^"
        "{2} + 3 p^{5} Y - p^{4} Y^{2} + p^{5} Y^{-1} Z^{2} - 2 p^{4} Z^{2} + 3 p^{5} - 3 p^{4} Y + p^{5} Y Z"
        "^{-2} + 3 p^{5} Y^{-1} - 5 p^{4} + 2 p^{5} Z^{-2} + p^{5} Y^{-2} - 3 p^{4} Y^{-1} + p^{3} + 3 p^{5} "
        "Y^{-1} Z^{-2} - 2 p^{4} Z^{-2} - p^{4} Y^{-2} + p^{2} + 2 p^{5} Y^{-2} Z^{-2} - 3 p^{4} Y^{-1} Z^{-2"
        "} + p^{5} Y^{-1} Z^{-4} + p^{5} Y^{-3} Z^{-2} - 2 p^{4} Y^{-2} Z^{-2} + p^{5} Y^{-2} Z^{-4} + p^{5} "
        "Y^{-3} Z^{-4} - p^{4} Y^{-2} Z^{-4}"},
      {"tau_2_4", "tau(2,4)",
        "p^{4} Y^{2} Z^{4} + p^{4} Y^{2} Z^{2} + p^{4} Y Z^{2} - p^{3} Y^{2} Z^{2} + p^{4} Y^{2} + p^{4} Z^{2"
        "} - p^{3} Y Z^{2} + p^{4} Y - p^{3} Z^{2} + 2 p^{4} - p^{3} Y + p^{4} Y^{-1} - 2 p^{3} + p^{4} Z^{-2"
        "} + p^{4} Y^{-2} - p^{3} Y^{-1} + p^{4} Y^{-1} Z^{-2} - p^{3} Z^{-2} + p^{4} Y^{-2} Z^{-2} - p^{3} Y"
        "^{-1} Z^{-2} - p^{3} Y^{-2} Z^{-2} + p^{4} Y^{-2} Z^{-4}"},
      {"tau_2_6", "tau(2,6)",
        "p^{7} Y^{4} Z^{6} + p^{7} Y^{3} Z^{6} + p^{7} Y^{4} Z^{4} + p^{7} Y^{2} Z^{6} - p^{6} Y^{3} Z^{6} + "
        "2 p^{7} Y^{3} Z^{4} - p^{6} Y^{4} Z^{4} + p^{7} Y^{4} Z^{2} + 3 p^{7} Y^{2} Z^{4} - 3 p^{6} Y^{3} Z^"
        "{4} + 2 p^{7} Y^{3} Z^{2} + 2 p^{7} Y Z^{4} - 4 p^{6} Y^{2} Z^{4} + p^{5} Y^{3} Z^{4} + 4 p^{7} Y^{2"
        "} Z^{2} - 3 p^{6} Y^{3} Z^{2} + p^{7} Z^{4} - 3 p^{6} Y Z^{4} + p^{5} Y^{2} Z^{4} + p^{7} Y^{3} + 4 "
        "p^{7} Y Z^{2} - 6 p^{6} Y^{2} Z^{2} + p^{5} Y^{3} Z^{2} - p^{6} Z^{4} + p^{5} Y Z^{4} + 3 p^{7} Y^{2"
        "} - p^{6} Y^{3} + 4 p^{7} Z^{2} - 8 p^{6} Y Z^{2} + 3 p^{5} Y^{2} Z^{2} + 4 p^{7} Y - 4 p^{6} Y^{2} "
        "+ 2 p^{7} Y^{-1} Z^{2} - 6 p^{6} Z^{2} + 5 p^{5} Y Z^{2} - p^{4} Y^{2} Z^{2} + p^{7} Y^{2} Z^{-2} + "
        "5 p^{7} - 8 p^{6} Y + p^{5} Y^{2} + p^{7} Y^{-2} Z^{2} - 3 p^{6} Y^{-1} Z^{2} + 3 p^{5} Z^{2} - p^{4"
        "} Y Z^{2} + 2 p^{7} Y Z^{-2} + 4 p^{7} Y^{-1} - 10 p^{6} + 5 p^{5} Y + p^{5} Y^{-1} Z^{2} - p^{4} Z^"
        "{2} + 4 p^{7} Z^{-2} - 3 p^{6} Y Z^{-2} + 3 p^{7} Y^{-2} - 8 p^{6} Y^{-1} + 6 p^{5} - p^{4} Y + 4 p^"
        "{7} Y^{-1} Z^{-2} - 6 p^{6} Z^{-2} + p^{5} Y Z^{-2} + p^{7} Y^{-3} - 4 p^{6} Y^{-2} + 5 p^{5} Y^{-1}"
        " - 2 p^{4} + p^{7} Z^{-4} + 4 p^{7} Y^{-2} Z^{-2} - 8 p^{6} Y^{-1} Z^{-2} + 3 p^{5} Z^{-2} - p^{6} Y"
        "^{-3} + p^{5} Y^{-2} - p^{4} Y^{-1} + p^{3} + 2 p^{7} Y^{-1} Z^{-4} - p^{6} Z^{-4} + 2 p^{7} Y^{-3} "
        "Z^{-2} - 6 p^{6} Y^{-2} Z^{-2} + 5 p^{5} Y^{-1} Z^{-2} - p^{4} Z^{-2} + 3 p^{7} Y^{-2} Z^{-4} - 3 p^"
        "{6} Y^{-1} Z^{-4} + p^{7} Y^{-4} Z^{-2} - 3 p^{6} Y^{-3} Z^{-2} + 3 p^{5} Y^{-2} Z^{-2} - p^{4} Y^{-"
        "1} Z^{-2} + 2 p^{7} Y^{-3} Z^{-4} - 4 p^{6} Y^{-2} Z^{-4} + p^{5} Y^{-1} Z^{-4} + p^{5} Y^{-3} Z^{-2"
        "} - p^{4} Y^{-2} Z^{-2} + p^{7} Y^{-2} Z^{-6} + p^{7} Y^{-4} Z^{-4} - 3 p^{6} Y^{-3} Z^{-4} + p^{5} "
        "Y^{-2} Z^{-4} + p^{7} Y^{-3} Z^{-6} - p^{6} Y^{-4} Z^{-4} + p^{5} Y^{-3} Z^{-4} + p^{7} Y^{-4} Z^{-6"
        "} - p^{6} Y^{-3} Z^{-6}"},
      {"tau_3_6", "tau(3,6)",
        "p^{6} Y^{3} Z^{6} + p^{6} Y^{3} Z^{4} + p^{6} Y^{2} Z^{4} - p^{5} Y^{3} Z^{4} + p^{6} Y^{3} Z^{2} + "
        "p^{6} Y Z^{4} - p^{5} Y^{2} Z^{4} + p^{6} Y^{2} Z^{2} - p^{5} Y^{3} Z^{2} - p^{5} Y Z^{4} + p^{6} Y^"
        "{3} + 2 p^{6} Y Z^{2} - 2 p^{5} Y^{2} Z^{2} + p^{6} Y^{2} + p^{6} Z^{2} - 3 p^{5} Y Z^{2} + p^{4} Y^"
        "{2} Z^{2} + 2 p^{6} Y - p^{5} Y^{2} + p^{6} Y^{-1} Z^{2} - 2 p^{5} Z^{2} + p^{4} Y Z^{2} + 2 p^{6} -"
        " 3 p^{5} Y - p^{5} Y^{-1} Z^{2} + p^{4} Z^{2} + p^{6} Y Z^{-2} + 2 p^{6} Y^{-1} - 3 p^{5} + p^{4} Y "
        "+ p^{6} Z^{-2} - p^{5} Y Z^{-2} + p^{6} Y^{-2} - 3 p^{5} Y^{-1} + 2 p^{4} + 2 p^{6} Y^{-1} Z^{-2} - "
        "2 p^{5} Z^{-2} + p^{6} Y^{-3} - p^{5} Y^{-2} + p^{4} Y^{-1} - p^{3} + p^{6} Y^{-2} Z^{-2} - 3 p^{5} "
        "Y^{-1} Z^{-2} + p^{4} Z^{-2} + p^{6} Y^{-1} Z^{-4} + p^{6} Y^{-3} Z^{-2} - 2 p^{5} Y^{-2} Z^{-2} + p"
        "^{4} Y^{-1} Z^{-2} + p^{6} Y^{-2} Z^{-4} - p^{5} Y^{-1} Z^{-4} - p^{5} Y^{-3} Z^{-2} + p^{4} Y^{-2} "
        "Z^{-2} + p^{6} Y^{-3} Z^{-4} - p^{5} Y^{-2} Z^{-4} - p^{5} Y^{-3} Z^{-4} + p^{6} Y^{-3} Z^{-6}"},
      {"tau_4_8", "tau(4,8)",
        "p^{8} Y^{4} Z^{8} + p^{8} Y^{4} Z^{6} + p^{8} Y^{3} Z^{6} - p^{7} Y^{4} Z^{6} + p^{8} Y^{4} Z^{4} + "
        "p^{8} Y^{2} Z^{6} - p^{7} Y^{3} Z^{6} + p^{8} Y^{3} Z^{4} - p^{7} Y^{4} Z^{4} - p^{7} Y^{2} Z^{6} + "
        "p^{8} Y^{4} Z^{2} + 2 p^{8} Y^{2} Z^{4} - 2 p^{7} Y^{3} Z^{4} + p^{8} Y^{3} Z^{2} - p^{7} Y^{4} Z^{2"
        "} + p^{8} Y Z^{4} - 3 p^{7} Y^{2} Z^{4} + p^{6} Y^{3} Z^{4} + p^{8} Y^{4} + 2 p^{8} Y^{2} Z^{2} - 2 "
        "p^{7} Y^{3} Z^{2} + p^{8} Z^{4} - 2 p^{7} Y Z^{4} + p^{6} Y^{2} Z^{4} + p^{8} Y^{3} + 2 p^{8} Y Z^{2"
        "} - 4 p^{7} Y^{2} Z^{2} + p^{6} Y^{3} Z^{2} - p^{7} Z^{4} + p^{6} Y Z^{4} + 2 p^{8} Y^{2} - p^{7} Y^"
        "{3} + 2 p^{8} Z^{2} - 4 p^{7} Y Z^{2} + 2 p^{6} Y^{2} Z^{2} + 2 p^{8} Y - 3 p^{7} Y^{2} + p^{8} Y^{-"
        "1} Z^{2} - 4 p^{7} Z^{2} + 3 p^{6} Y Z^{2} + p^{8} Y^{2} Z^{-2} + 3 p^{8} - 4 p^{7} Y + p^{6} Y^{2} "
        "+ p^{8} Y^{-2} Z^{2} - 2 p^{7} Y^{-1} Z^{2} + 2 p^{6} Z^{2} - p^{5} Y Z^{2} + p^{8} Y Z^{-2} - p^{7}"
        " Y^{2} Z^{-2} + 2 p^{8} Y^{-1} - 5 p^{7} + 3 p^{6} Y - p^{7} Y^{-2} Z^{2} + p^{6} Y^{-1} Z^{2} + 2 p"
        "^{8} Z^{-2} - 2 p^{7} Y Z^{-2} + 2 p^{8} Y^{-2} - 4 p^{7} Y^{-1} + 3 p^{6} - p^{5} Y + 2 p^{8} Y^{-1"
        "} Z^{-2} - 4 p^{7} Z^{-2} + p^{6} Y Z^{-2} + p^{8} Y^{-3} - 3 p^{7} Y^{-2} + 3 p^{6} Y^{-1} - p^{5} "
        "+ p^{8} Z^{-4} + 2 p^{8} Y^{-2} Z^{-2} - 4 p^{7} Y^{-1} Z^{-2} + 2 p^{6} Z^{-2} + p^{8} Y^{-4} - p^{"
        "7} Y^{-3} + p^{6} Y^{-2} - p^{5} Y^{-1} + p^{8} Y^{-1} Z^{-4} - p^{7} Z^{-4} + p^{8} Y^{-3} Z^{-2} -"
        " 4 p^{7} Y^{-2} Z^{-2} + 3 p^{6} Y^{-1} Z^{-2} + 2 p^{8} Y^{-2} Z^{-4} - 2 p^{7} Y^{-1} Z^{-4} + p^{"
        "8} Y^{-4} Z^{-2} - 2 p^{7} Y^{-3} Z^{-2} + 2 p^{6} Y^{-2} Z^{-2} - p^{5} Y^{-1} Z^{-2} + p^{8} Y^{-3"
        "} Z^{-4} - 3 p^{7} Y^{-2} Z^{-4} + p^{6} Y^{-1} Z^{-4} - p^{7} Y^{-4} Z^{-2} + p^{6} Y^{-3} Z^{-2} +"
        " p^{8} Y^{-2} Z^{-6} + p^{8} Y^{-4} Z^{-4} - 2 p^{7} Y^{-3} Z^{-4} + p^{6} Y^{-2} Z^{-4} + p^{8} Y^{"
        "-3} Z^{-6} - p^{7} Y^{-2} Z^{-6} - p^{7} Y^{-4} Z^{-4} + p^{6} Y^{-3} Z^{-4} + p^{8} Y^{-4} Z^{-6} -"
        " p^{7} Y^{-3} Z^{-6} - p^{7} Y^{-4} Z^{-6} + p^{8} Y^{-4} Z^{-8}"},
      {"T2_squared", "T2^2",
        "p^{4} Y^{2} Z^{4} + 2 p^{4} Y^{2} Z^{2} + 2 p^{4} Y Z^{2} + p^{4} Y^{2} + 2 p^{4} Z^{2} + 2 p^{4} Y "
        "- 2 p^{2} Y Z^{2} + 5 p^{4} + 2 p^{4} Y^{-1} - 2 p^{2} Y + 2 p^{4} Z^{-2} + p^{4} Y^{-2} - 2 p^{2} +"
        " 2 p^{4} Y^{-1} Z^{-2} - 2 p^{2} Y^{-1} + 2 p^{4} Y^{-2} Z^{-2} + 1 - 2 p^{2} Y^{-1} Z^{-2} + p^{4} "
        "Y^{-2} Z^{-4}"},
      {"sigma", "sigma",
        "p^{4} Y^{2} Z^{4} + p^{4} Y^{2} Z^{2} - p^{3} Y^{2} Z^{2} + p^{4} Y^{2} + p^{4} Z^{2} - 2 p^{3} Y Z^"
        "{2} - p^{3} Z^{2} - 2 p^{2} Y Z^{2} + p^{4} - 2 p^{3} Y - 4 p^{3} - 2 p^{2} Y + p^{4} Z^{-2} + p^{4}"
        " Y^{-2} - 2 p^{3} Y^{-1} - 2 p^{2} - p^{3} Z^{-2} - 2 p^{2} Y^{-1} + p^{4} Y^{-2} Z^{-2} - 2 p^{3} Y"
        "^{-1} Z^{-2} + 1 - p^{3} Y^{-2} Z^{-2} - 2 p^{2} Y^{-1} Z^{-2} + p^{4} Y^{-2} Z^{-4}"},
      {"sigma_squared", "sigma^2",
        "p^{8} Y^{4} Z^{8} + 2 p^{8} Y^{4} Z^{6} - 2 p^{7} Y^{4} Z^{6} + 3 p^{8} Y^{4} Z^{4} + 2 p^{8} Y^{2} "
        "Z^{6} - 4 p^{7} Y^{3} Z^{6} - 2 p^{7} Y^{4} Z^{4} - 2 p^{7} Y^{2} Z^{6} - 4 p^{6} Y^{3} Z^{6} + 2 p^"
        "{8} Y^{4} Z^{2} + 4 p^{8} Y^{2} Z^{4} - 8 p^{7} Y^{3} Z^{4} + p^{6} Y^{4} Z^{4} - 2 p^{7} Y^{4} Z^{2"
        "} - 12 p^{7} Y^{2} Z^{4} - 4 p^{6} Y^{3} Z^{4} + p^{8} Y^{4} + 6 p^{8} Y^{2} Z^{2} - 8 p^{7} Y^{3} Z"
        "^{2} + 3 p^{8} Z^{4} - 8 p^{7} Y Z^{4} + 2 p^{6} Y^{2} Z^{4} + 4 p^{5} Y^{3} Z^{4} - 14 p^{7} Y^{2} "
        "Z^{2} - 4 p^{6} Y^{3} Z^{2} - 2 p^{7} Z^{4} - 4 p^{6} Y Z^{4} + 8 p^{5} Y^{2} Z^{4} + 4 p^{8} Y^{2} "
        "- 4 p^{7} Y^{3} + 6 p^{8} Z^{2} - 16 p^{7} Y Z^{2} + 12 p^{6} Y^{2} Z^{2} + 4 p^{5} Y^{3} Z^{2} + p^"
        "{6} Z^{4} + 4 p^{5} Y Z^{4} + 6 p^{4} Y^{2} Z^{4} - 12 p^{7} Y^{2} - 4 p^{6} Y^{3} - 14 p^{7} Z^{2} "
        "+ 8 p^{6} Y Z^{2} + 20 p^{5} Y^{2} Z^{2} + 2 p^{8} Y^{2} Z^{-2} + 9 p^{8} - 16 p^{7} Y + 2 p^{6} Y^{"
        "2} + 2 p^{8} Y^{-2} Z^{2} - 8 p^{7} Y^{-1} Z^{2} + 12 p^{6} Z^{2} + 32 p^{5} Y Z^{2} + 10 p^{4} Y^{2"
        "} Z^{2} - 2 p^{7} Y^{2} Z^{-2} - 16 p^{7} + 8 p^{6} Y + 8 p^{5} Y^{2} - 2 p^{7} Y^{-2} Z^{2} - 4 p^{"
        "6} Y^{-1} Z^{2} + 20 p^{5} Z^{2} + 8 p^{4} Y Z^{2} - 2 p^{3} Y^{2} Z^{2} + 6 p^{8} Z^{-2} - 8 p^{7} "
        "Y Z^{-2} + 4 p^{8} Y^{-2} - 16 p^{7} Y^{-1} + 32 p^{6} + 32 p^{5} Y + 6 p^{4} Y^{2} + 4 p^{5} Y^{-1}"
        " Z^{2} + 10 p^{4} Z^{2} - 4 p^{3} Y Z^{2} - 14 p^{7} Z^{-2} - 4 p^{6} Y Z^{-2} - 12 p^{7} Y^{-2} + 8"
        " p^{6} Y^{-1} + 48 p^{5} + 8 p^{4} Y - 2 p^{3} Z^{2} - 4 p^{2} Y Z^{2} + 3 p^{8} Z^{-4} + 6 p^{8} Y^"
        "{-2} Z^{-2} - 16 p^{7} Y^{-1} Z^{-2} + 12 p^{6} Z^{-2} + 4 p^{5} Y Z^{-2} + p^{8} Y^{-4} - 4 p^{7} Y"
        "^{-3} + 2 p^{6} Y^{-2} + 32 p^{5} Y^{-1} + 22 p^{4} - 4 p^{3} Y - 2 p^{7} Z^{-4} - 14 p^{7} Y^{-2} Z"
        "^{-2} + 8 p^{6} Y^{-1} Z^{-2} + 20 p^{5} Z^{-2} - 4 p^{6} Y^{-3} + 8 p^{5} Y^{-2} + 8 p^{4} Y^{-1} -"
        " 8 p^{3} - 4 p^{2} Y + 4 p^{8} Y^{-2} Z^{-4} - 8 p^{7} Y^{-1} Z^{-4} + p^{6} Z^{-4} + 2 p^{8} Y^{-4}"
        " Z^{-2} - 8 p^{7} Y^{-3} Z^{-2} + 12 p^{6} Y^{-2} Z^{-2} + 32 p^{5} Y^{-1} Z^{-2} + 10 p^{4} Z^{-2} "
        "+ 6 p^{4} Y^{-2} - 4 p^{3} Y^{-1} - 4 p^{2} - 12 p^{7} Y^{-2} Z^{-4} - 4 p^{6} Y^{-1} Z^{-4} - 2 p^{"
        "7} Y^{-4} Z^{-2} - 4 p^{6} Y^{-3} Z^{-2} + 20 p^{5} Y^{-2} Z^{-2} + 8 p^{4} Y^{-1} Z^{-2} - 2 p^{3} "
        "Z^{-2} - 4 p^{2} Y^{-1} + 2 p^{8} Y^{-2} Z^{-6} + 3 p^{8} Y^{-4} Z^{-4} - 8 p^{7} Y^{-3} Z^{-4} + 2 "
        "p^{6} Y^{-2} Z^{-4} + 4 p^{5} Y^{-1} Z^{-4} + 4 p^{5} Y^{-3} Z^{-2} + 10 p^{4} Y^{-2} Z^{-2} - 4 p^{"
        "3} Y^{-1} Z^{-2} + 1 - 2 p^{7} Y^{-2} Z^{-6} - 2 p^{7} Y^{-4} Z^{-4} - 4 p^{6} Y^{-3} Z^{-4} + 8 p^{"
        "5} Y^{-2} Z^{-4} - 2 p^{3} Y^{-2} Z^{-2} - 4 p^{2} Y^{-1} Z^{-2} + 2 p^{8} Y^{-4} Z^{-6} - 4 p^{7} Y"
        "^{-3} Z^{-6} + p^{6} Y^{-4} Z^{-4} + 4 p^{5} Y^{-3} Z^{-4} + 6 p^{4} Y^{-2} Z^{-4} - 2 p^{7} Y^{-4} "
        "Z^{-6} - 4 p^{6} Y^{-3} Z^{-6} + p^{8} Y^{-4} Z^{-8}"},
  };
  return items;
}
const std::vector<GoldenDecomposition>& golden_decompositions() {
  static const std::vector<GoldenDecomposition> items{
      {"T2_squared", "T2^2", {{0, 0, "p^4+p^3+p^2+p"}, {0, 2, "p+1"}, {1, 2, "p-1"}, {2, 4, "1"}}},
      {"sigma", "sigma", {{0, 0, "-p^3-p^2-p-1"}, {1, 2, "-p^2-p-2"}, {2, 4, "1"}}},
      {"sigma_squared",
       "sigma^2",
       {{0, 0, "2p^8+4p^7+10p^6+15p^5+18p^4+17p^3+11p^2+6p+1"},
        {0, 2, "2p^5+3p^4+6p^3+9p^2+8p+4"},
        {1, 2, "-2p^6+2p^5+11p^3+7p^2+6p"},
        {0, 4, "p^2+p"},
        {1, 4, "-2p^3-2p^2-4p"},
        {2, 4, "2p^4-3p^3+3p^2+6"},
        {2, 6, "p-1"},
        {3, 6, "-2p^2-p-5"},
        {4, 8, "1"}}},
  };
  return items;
}

namespace {

HeckeElement expected_element(const GoldenDecomposition& g) {
  HeckeElement h;
  for (const auto& t : g.terms) h.add({t.m, t.l}, parse_poly(t.coeff));
  return h;
}

void run_transforms(std::vector<VerifyItem>& out) {
  for (const auto& g : golden_transforms()) {
    VerifyItem item{"transforms", g.name, false, ""};
    try {
      const SatakePoly got = eval_expr(parse_hecke(g.expr));
      const LaurentPoly want = parse_poly(g.polynomial);
      item.pass = got.stored() == want;
      item.detail = item.pass ? std::to_string(want.size()) + " terms" : "got " + got.str();
    } catch (const Error& e) {
      item.detail = e.what();
    }
    out.push_back(std::move(item));
  }
}

void run_decompositions(std::vector<VerifyItem>& out) {
  for (const auto& g : golden_decompositions()) {
    VerifyItem item{"decompositions", g.name, false, ""};
    try {
      const HeckeElement got = decompose(eval_expr(parse_hecke(g.expr)));
      item.pass = got == expected_element(g);
      item.detail = item.pass ? std::to_string(got.terms().size()) + " basic operators" : "got " + got.str();
    } catch (const Error& e) {
      item.detail = e.what();
    }
    out.push_back(std::move(item));
  }
}

void run_dictionary(std::vector<VerifyItem>& out) {
  for (std::int64_t p : {3, 7, 11})
    for (std::int64_t l = 0; l <= 4; ++l)
      for (std::int64_t m = 0; 2 * m <= l; ++m) {
        VerifyItem item{"dictionary", "p=" + std::to_string(p) + " m=" + std::to_string(m) + " l=" + std::to_string(l),
                        false, ""};
        try {
          const DictionaryReport rep = verify_dictionary(p, m, l, 6);
          item.pass = rep.pass;
          std::string smith;
          for (int v : rep.smith) smith += (smith.empty() ? "" : ",") + std::to_string(v);
          item.detail = "similitude valuation " + std::to_string(rep.similitude_valuation) + ", smith (" + smith + ")";
        } catch (const Error& e) {
          item.detail = e.what();
        }
        out.push_back(std::move(item));
      }
}

}  // namespace

std::vector<VerifyItem> run_verify(const std::string& suite) {
  std::vector<VerifyItem> out;
  const bool all = suite == "all";
  if (!all && suite != "transforms" && suite != "decompositions" && suite != "dictionary")
    throw Error(Errc::InvalidArgument, "unknown suite '" + suite + "'");
  if (all || suite == "transforms") run_transforms(out);
  if (all || suite == "decompositions") run_decompositions(out);
  if (all || suite == "dictionary") run_dictionary(out);
  return out;
}

}  // namespace gsp4
