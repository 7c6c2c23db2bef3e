#pragma once

// Matrices and tables transcribed from the published displays. Rows use '*'
// for a free entry and '0' for a forced zero (subalgebras), or 0/1 adjacency.

#include <string>
#include <utility>
#include <vector>

namespace matalg::test::reference {

struct DisplayedSubalgebra {
  std::vector<int> subset;  // 1-based, names V_i
  std::vector<std::string> rows;
};

inline std::vector<DisplayedSubalgebra> const kS2{
    {{1}, {"**", "0*"}},
    {{2}, {"*0", "**"}},
};

inline std::vector<DisplayedSubalgebra> const kS3{
    {{1}, {"***", "0**", "0**"}},
    {{2}, {"*0*", "***", "*0*"}},
    {{3}, {"**0", "**0", "***"}},
    {{2, 3}, {"*00", "***", "***"}},
    {{1, 3}, {"***", "0*0", "***"}},
    {{1, 2}, {"***", "***", "00*"}},
};

inline std::vector<DisplayedSubalgebra> const kS4{
    // |i| = 1
    {{1}, {"****", "0***", "0***", "0***"}},
    {{2}, {"*0**", "****", "*0**", "*0**"}},
    {{3}, {"**0*", "**0*", "****", "**0*"}},
    {{4}, {"***0", "***0", "***0", "****"}},
    // |i| = 3
    {{2, 3, 4}, {"*000", "****", "****", "****"}},
    {{1, 3, 4}, {"****", "0*00", "****", "****"}},
    {{1, 2, 4}, {"****", "****", "00*0", "****"}},
    {{1, 2, 3}, {"****", "****", "****", "000*"}},
    // |i| = 2
    {{1, 2}, {"****", "****", "00**", "00**"}},
    {{1, 3}, {"****", "0*0*", "****", "0*0*"}},
    {{1, 4}, {"****", "0**0", "0**0", "****"}},
    {{2, 3}, {"*00*", "****", "****", "*00*"}},
    {{2, 4}, {"*0*0", "****", "*0*0", "****"}},
    {{3, 4}, {"**00", "**00", "****", "****"}},
};

// G_1(3) .. G_5(3).
inline std::vector<std::vector<std::string>> const kG3{
    {"001", "100", "010"},
    {"010", "001", "100"},
    {"010", "101", "010"},
    {"011", "100", "100"},
    {"001", "001", "110"},
};

// Displayed powers of the G(3) members.
inline std::vector<std::string> const kG1Squared{"010", "001", "100"};
inline std::vector<std::string> const kG1Cubed{"100", "010", "001"};
inline std::vector<std::string> const kG3Squared{"101", "010", "101"};
inline std::vector<std::string> const kG4Squared{"100", "011", "011"};
inline std::vector<std::string> const kG5Squared{"110", "110", "001"};

struct Arrow {
  std::vector<int> parent;  // 1-based subset at level n
  int branch;               // projector index r
  std::vector<int> first;   // children at level n + 1
  std::vector<int> second;
};

// Level 2 -> 3, all eight arrows.
inline std::vector<Arrow> const kArrows2to3{
    {{1}, 0, {1}, {1, 3}},
    {{1}, 1, {2}, {1, 2}},
    {{2}, 0, {2}, {2, 3}},
    {{2}, 1, {3}, {1, 3}},
};

// Level 3 -> 4, the four worked cases.
inline std::vector<Arrow> const kArrows3to4{
    {{1}, 0, {1}, {1, 4}},
    {{1}, 1, {2}, {1, 2}},
    {{1, 3}, 0, {1, 3}, {1, 3, 4}},
    {{1, 3}, 1, {2, 4}, {1, 2, 4}},
};

}  // namespace matalg::test::reference
