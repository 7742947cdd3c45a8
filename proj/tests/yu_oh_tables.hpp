#ifndef CTX_TESTS_YU_OH_TABLES_HPP
#define CTX_TESTS_YU_OH_TABLES_HPP

#include <array>
#include <string>

// Published 0/1 valuation table for the completed 25-ray scenario.
// Column order: 1..9, A, B, C, D, then 1'..12'.
inline const std::array<std::string, 24> kYuOhAssignments = {
    //         123456789ABCD   1'      12'
    std::string("0010001100000" "101101100111"),
    std::string("0010101000000" "111001101101"),
    std::string("0010001100001" "101101100000"),
    std::string("0011000100000" "001111110011"),
    std::string("0011100000000" "011011111001"),
    std::string("0011100000010" "011011000001"),
    std::string("0011000100100" "001000110011"),
    std::string("0100001010000" "110100101111"),
    std::string("0100011000000" "111101001110"),
    std::string("0100001010001" "110100101000"),
    std::string("0101000010000" "010110111011"),
    std::string("0101010000000" "011111011010"),
    std::string("0101000010010" "010110000011"),
    std::string("0101010000100" "011000011010"),
    std::string("0010101001000" "000001101101"),
    std::string("0100011001000" "000101001110"),
    std::string("1000000110000" "100110110111"),
    std::string("1000010100000" "101111010110"),
    std::string("1000100010000" "110010111101"),
    std::string("1000110000000" "111011011100"),
    std::string("1000000110001" "100110110000"),
    std::string("1000100010010" "110010000101"),
    std::string("1000010100100" "101000010110"),
    std::string("1000110001000" "000011011100"),
};

#endif
