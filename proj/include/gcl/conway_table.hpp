// Generated by tools/gen_conway_table.py. Do not edit.
#pragma once

#include <cstdint>

namespace gcl::detail {

inline constexpr std::uint32_t kConwayMaxDegree = 23;

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t n;
  std::uint32_t coeffs[kConwayMaxDegree + 1];  // c0 .. cn, monic; zero padded
};

inline constexpr std::uint32_t kConwayTableLimit = 4194304;

inline const ConwayEntry kConwayTable[] = {
    {3, 1, {1, 1}},
    {3, 2, {2, 2, 1}},
    {3, 3, {1, 2, 0, 1}},
    {3, 4, {2, 0, 0, 2, 1}},
    {3, 5, {1, 2, 0, 0, 0, 1}},
    {3, 6, {2, 2, 1, 0, 2, 0, 1}},
    {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
    {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
    {3, 9, {1, 1, 2, 2, 0, 0, 0, 0, 0, 1}},
    {3, 10, {2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1}},
    {3, 11, {1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {3, 12, {2, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 1}},
    {3, 13, {1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
    {5, 1, {3, 1}},
    {5, 2, {2, 4, 1}},
    {5, 3, {3, 3, 0, 1}},
    {5, 4, {2, 4, 4, 0, 1}},
    {5, 5, {3, 4, 0, 0, 0, 1}},
    {5, 6, {2, 0, 1, 4, 1, 0, 1}},
    {5, 7, {3, 3, 0, 0, 0, 0, 0, 1}},
    {5, 8, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
    {5, 9, {3, 1, 0, 2, 0, 0, 0, 0, 0, 1}},
    {7, 1, {4, 1}},
    {7, 2, {3, 6, 1}},
    {7, 3, {4, 0, 6, 1}},
    {7, 4, {3, 4, 5, 0, 1}},
    {7, 5, {4, 1, 0, 0, 0, 1}},
    {7, 6, {3, 6, 4, 5, 1, 0, 1}},
    {7, 7, {4, 6, 0, 0, 0, 0, 0, 1}},
    {11, 1, {9, 1}},
    {11, 2, {2, 7, 1}},
    {11, 3, {9, 2, 0, 1}},
    {11, 4, {2, 10, 8, 0, 1}},
    {11, 5, {9, 0, 10, 0, 0, 1}},
    {11, 6, {2, 7, 6, 4, 3, 0, 1}},
    {13, 1, {11, 1}},
    {13, 2, {2, 12, 1}},
    {13, 3, {11, 2, 0, 1}},
    {13, 4, {2, 12, 3, 0, 1}},
    {13, 5, {11, 4, 0, 0, 0, 1}},
    {17, 1, {14, 1}},
    {17, 2, {3, 16, 1}},
    {17, 3, {14, 1, 0, 1}},
    {17, 4, {3, 10, 7, 0, 1}},
    {17, 5, {14, 1, 0, 0, 0, 1}},
    {19, 1, {17, 1}},
    {19, 2, {2, 18, 1}},
    {19, 3, {17, 4, 0, 1}},
    {19, 4, {2, 11, 2, 0, 1}},
    {19, 5, {17, 5, 0, 0, 0, 1}},
    {23, 1, {18, 1}},
    {23, 2, {5, 21, 1}},
    {23, 3, {18, 2, 0, 1}},
    {23, 4, {5, 19, 3, 0, 1}},
    {29, 1, {27, 1}},
    {29, 2, {2, 24, 1}},
    {29, 3, {27, 2, 0, 1}},
    {29, 4, {2, 15, 2, 0, 1}},
    {31, 1, {28, 1}},
    {31, 2, {3, 29, 1}},
    {31, 3, {28, 1, 0, 1}},
    {31, 4, {3, 16, 3, 0, 1}},
    {37, 1, {35, 1}},
    {37, 2, {2, 33, 1}},
    {37, 3, {35, 6, 0, 1}},
    {37, 4, {2, 24, 6, 0, 1}},
    {41, 1, {35, 1}},
    {41, 2, {6, 38, 1}},
    {41, 3, {35, 1, 0, 1}},
    {41, 4, {6, 23, 0, 0, 1}},
    {43, 1, {40, 1}},
    {43, 2, {3, 42, 1}},
    {43, 3, {40, 1, 0, 1}},
    {43, 4, {3, 42, 5, 0, 1}},
    {47, 1, {42, 1}},
    {47, 2, {5, 45, 1}},
    {47, 3, {42, 3, 0, 1}},
    {53, 1, {51, 1}},
    {53, 2, {2, 49, 1}},
    {53, 3, {51, 3, 0, 1}},
    {59, 1, {57, 1}},
    {59, 2, {2, 58, 1}},
    {59, 3, {57, 5, 0, 1}},
    {61, 1, {59, 1}},
    {61, 2, {2, 60, 1}},
    {61, 3, {59, 7, 0, 1}},
    {67, 1, {65, 1}},
    {67, 2, {2, 63, 1}},
    {67, 3, {65, 6, 0, 1}},
    {71, 1, {64, 1}},
    {71, 2, {7, 69, 1}},
    {71, 3, {64, 4, 0, 1}},
    {73, 1, {68, 1}},
    {73, 2, {5, 70, 1}},
    {73, 3, {68, 2, 0, 1}},
    {79, 1, {76, 1}},
    {79, 2, {3, 78, 1}},
    {79, 3, {76, 9, 0, 1}},
    {83, 1, {81, 1}},
    {83, 2, {2, 82, 1}},
    {83, 3, {81, 3, 0, 1}},
    {89, 1, {86, 1}},
    {89, 2, {3, 82, 1}},
    {89, 3, {86, 3, 0, 1}},
    {97, 1, {92, 1}},
    {97, 2, {5, 96, 1}},
    {97, 3, {92, 9, 0, 1}},
    {101, 1, {99, 1}},
    {101, 2, {2, 97, 1}},
    {101, 3, {99, 3, 0, 1}},
    {103, 1, {98, 1}},
    {103, 2, {5, 102, 1}},
    {103, 3, {98, 2, 0, 1}},
    {107, 1, {105, 1}},
    {107, 2, {2, 103, 1}},
    {107, 3, {105, 5, 0, 1}},
    {109, 1, {103, 1}},
    {109, 2, {6, 108, 1}},
    {109, 3, {103, 1, 0, 1}},
    {113, 1, {110, 1}},
    {113, 2, {3, 101, 1}},
    {113, 3, {110, 8, 0, 1}},
    {127, 1, {124, 1}},
    {127, 2, {3, 126, 1}},
    {127, 3, {124, 3, 0, 1}},
    {131, 1, {129, 1}},
    {131, 2, {2, 127, 1}},
    {131, 3, {129, 3, 0, 1}},
    {137, 1, {134, 1}},
    {137, 2, {3, 131, 1}},
    {137, 3, {134, 6, 0, 1}},
    {139, 1, {137, 1}},
    {139, 2, {2, 138, 1}},
    {139, 3, {137, 6, 0, 1}},
    {149, 1, {147, 1}},
    {149, 2, {2, 145, 1}},
    {149, 3, {147, 3, 0, 1}},
    {151, 1, {145, 1}},
    {151, 2, {6, 149, 1}},
    {151, 3, {145, 1, 0, 1}},
    {157, 1, {152, 1}},
    {157, 2, {5, 152, 1}},
    {157, 3, {152, 1, 0, 1}},
    {163, 1, {161, 1}},
    {163, 2, {2, 159, 1}},
    {167, 1, {162, 1}},
    {167, 2, {5, 166, 1}},
    {173, 1, {171, 1}},
    {173, 2, {2, 169, 1}},
    {179, 1, {177, 1}},
    {179, 2, {2, 172, 1}},
    {181, 1, {179, 1}},
    {181, 2, {2, 177, 1}},
    {191, 1, {172, 1}},
    {191, 2, {19, 190, 1}},
    {193, 1, {188, 1}},
    {193, 2, {5, 192, 1}},
    {197, 1, {195, 1}},
    {197, 2, {2, 192, 1}},
    {199, 1, {196, 1}},
    {199, 2, {3, 193, 1}},
    {211, 1, {209, 1}},
    {211, 2, {2, 207, 1}},
    {223, 1, {220, 1}},
    {223, 2, {3, 221, 1}},
    {227, 1, {225, 1}},
    {227, 2, {2, 220, 1}},
    {229, 1, {223, 1}},
    {229, 2, {6, 228, 1}},
    {233, 1, {230, 1}},
    {233, 2, {3, 232, 1}},
    {239, 1, {232, 1}},
    {239, 2, {7, 237, 1}},
    {241, 1, {234, 1}},
    {241, 2, {7, 238, 1}},
    {251, 1, {245, 1}},
    {251, 2, {6, 242, 1}},
    {257, 1, {254, 1}},
    {257, 2, {3, 251, 1}},
    {263, 1, {258, 1}},
    {263, 2, {5, 261, 1}},
    {269, 1, {267, 1}},
    {269, 2, {2, 268, 1}},
    {271, 1, {265, 1}},
    {271, 2, {6, 269, 1}},
    {277, 1, {272, 1}},
    {277, 2, {5, 274, 1}},
    {281, 1, {278, 1}},
    {281, 2, {3, 280, 1}},
    {283, 1, {280, 1}},
    {283, 2, {3, 282, 1}},
    {293, 1, {291, 1}},
    {293, 2, {2, 292, 1}},
    {307, 1, {302, 1}},
    {307, 2, {5, 306, 1}},
    {311, 1, {294, 1}},
    {311, 2, {17, 310, 1}},
    {313, 1, {303, 1}},
    {313, 2, {10, 310, 1}},
    {317, 1, {315, 1}},
    {317, 2, {2, 313, 1}},
    {331, 1, {328, 1}},
    {331, 2, {3, 326, 1}},
    {337, 1, {327, 1}},
    {337, 2, {10, 332, 1}},
    {347, 1, {345, 1}},
    {347, 2, {2, 343, 1}},
    {349, 1, {347, 1}},
    {349, 2, {2, 348, 1}},
    {353, 1, {350, 1}},
    {353, 2, {3, 348, 1}},
    {359, 1, {352, 1}},
    {359, 2, {7, 358, 1}},
    {367, 1, {361, 1}},
    {367, 2, {6, 366, 1}},
    {373, 1, {371, 1}},
    {373, 2, {2, 369, 1}},
    {379, 1, {377, 1}},
    {379, 2, {2, 374, 1}},
    {383, 1, {378, 1}},
    {383, 2, {5, 382, 1}},
    {389, 1, {387, 1}},
    {389, 2, {2, 379, 1}},
    {397, 1, {392, 1}},
    {397, 2, {5, 392, 1}},
    {401, 1, {398, 1}},
    {401, 2, {3, 396, 1}},
    {409, 1, {388, 1}},
    {409, 2, {21, 404, 1}},
    {419, 1, {417, 1}},
    {419, 2, {2, 418, 1}},
    {421, 1, {419, 1}},
    {421, 2, {2, 417, 1}},
    {431, 1, {424, 1}},
    {431, 2, {7, 430, 1}},
    {433, 1, {428, 1}},
    {433, 2, {5, 432, 1}},
    {439, 1, {424, 1}},
    {439, 2, {15, 436, 1}},
    {443, 1, {441, 1}},
    {443, 2, {2, 437, 1}},
    {449, 1, {446, 1}},
    {449, 2, {3, 444, 1}},
    {457, 1, {444, 1}},
    {457, 2, {13, 454, 1}},
    {461, 1, {459, 1}},
    {461, 2, {2, 460, 1}},
    {463, 1, {460, 1}},
    {463, 2, {3, 461, 1}},
    {467, 1, {465, 1}},
    {467, 2, {2, 463, 1}},
    {479, 1, {466, 1}},
    {479, 2, {13, 474, 1}},
    {487, 1, {484, 1}},
    {487, 2, {3, 485, 1}},
    {491, 1, {489, 1}},
    {491, 2, {2, 487, 1}},
    {499, 1, {492, 1}},
    {499, 2, {7, 493, 1}},
    {503, 1, {498, 1}},
    {503, 2, {5, 498, 1}},
    {509, 1, {507, 1}},
    {509, 2, {2, 508, 1}},
    {521, 1, {518, 1}},
    {521, 2, {3, 515, 1}},
    {523, 1, {521, 1}},
    {523, 2, {2, 522, 1}},
    {541, 1, {539, 1}},
    {541, 2, {2, 537, 1}},
    {547, 1, {545, 1}},
    {547, 2, {2, 543, 1}},
    {557, 1, {555, 1}},
    {557, 2, {2, 553, 1}},
    {563, 1, {561, 1}},
    {563, 2, {2, 559, 1}},
    {569, 1, {566, 1}},
    {569, 2, {3, 568, 1}},
    {571, 1, {568, 1}},
    {571, 2, {3, 570, 1}},
    {577, 1, {572, 1}},
    {577, 2, {5, 572, 1}},
    {587, 1, {585, 1}},
    {587, 2, {2, 583, 1}},
    {593, 1, {590, 1}},
    {593, 2, {3, 592, 1}},
    {599, 1, {592, 1}},
    {599, 2, {7, 598, 1}},
    {601, 1, {594, 1}},
    {601, 2, {7, 598, 1}},
    {607, 1, {604, 1}},
    {607, 2, {3, 606, 1}},
    {613, 1, {611, 1}},
    {613, 2, {2, 609, 1}},
    {617, 1, {614, 1}},
    {617, 2, {3, 612, 1}},
    {619, 1, {617, 1}},
    {619, 2, {2, 618, 1}},
    {631, 1, {628, 1}},
    {631, 2, {3, 629, 1}},
    {641, 1, {638, 1}},
    {641, 2, {3, 635, 1}},
    {643, 1, {632, 1}},
    {643, 2, {11, 641, 1}},
    {647, 1, {642, 1}},
    {647, 2, {5, 645, 1}},
    {653, 1, {651, 1}},
    {653, 2, {2, 649, 1}},
    {659, 1, {657, 1}},
    {659, 2, {2, 655, 1}},
    {661, 1, {659, 1}},
    {661, 2, {2, 660, 1}},
    {673, 1, {668, 1}},
    {673, 2, {5, 672, 1}},
    {677, 1, {675, 1}},
    {677, 2, {2, 672, 1}},
    {683, 1, {678, 1}},
    {683, 2, {5, 682, 1}},
    {691, 1, {688, 1}},
    {691, 2, {3, 686, 1}},
    {701, 1, {699, 1}},
    {701, 2, {2, 697, 1}},
    {709, 1, {707, 1}},
    {709, 2, {2, 705, 1}},
    {719, 1, {708, 1}},
    {719, 2, {11, 715, 1}},
    {727, 1, {722, 1}},
    {727, 2, {5, 725, 1}},
    {733, 1, {727, 1}},
    {733, 2, {6, 732, 1}},
    {739, 1, {736, 1}},
    {739, 2, {3, 734, 1}},
    {743, 1, {738, 1}},
    {743, 2, {5, 742, 1}},
    {751, 1, {748, 1}},
    {751, 2, {3, 749, 1}},
    {757, 1, {755, 1}},
    {757, 2, {2, 753, 1}},
    {761, 1, {755, 1}},
    {761, 2, {6, 758, 1}},
    {769, 1, {758, 1}},
    {769, 2, {11, 765, 1}},
    {773, 1, {771, 1}},
    {773, 2, {2, 772, 1}},
    {787, 1, {785, 1}},
    {787, 2, {2, 786, 1}},
    {797, 1, {795, 1}},
    {797, 2, {2, 793, 1}},
    {809, 1, {806, 1}},
    {809, 2, {3, 799, 1}},
    {811, 1, {808, 1}},
    {811, 2, {3, 806, 1}},
    {821, 1, {819, 1}},
    {821, 2, {2, 816, 1}},
    {823, 1, {820, 1}},
    {823, 2, {3, 821, 1}},
    {827, 1, {825, 1}},
    {827, 2, {2, 821, 1}},
    {829, 1, {827, 1}},
    {829, 2, {2, 828, 1}},
    {839, 1, {828, 1}},
    {839, 2, {11, 838, 1}},
    {853, 1, {851, 1}},
    {853, 2, {2, 852, 1}},
    {857, 1, {854, 1}},
    {857, 2, {3, 850, 1}},
    {859, 1, {857, 1}},
    {859, 2, {2, 858, 1}},
    {863, 1, {858, 1}},
    {863, 2, {5, 862, 1}},
    {877, 1, {875, 1}},
    {877, 2, {2, 873, 1}},
    {881, 1, {878, 1}},
    {881, 2, {3, 869, 1}},
    {883, 1, {881, 1}},
    {883, 2, {2, 879, 1}},
    {887, 1, {882, 1}},
    {887, 2, {5, 885, 1}},
    {907, 1, {905, 1}},
    {907, 2, {2, 903, 1}},
    {911, 1, {894, 1}},
    {911, 2, {17, 909, 1}},
    {919, 1, {912, 1}},
    {919, 2, {7, 910, 1}},
    {929, 1, {926, 1}},
    {929, 2, {3, 917, 1}},
    {937, 1, {932, 1}},
    {937, 2, {5, 934, 1}},
    {941, 1, {939, 1}},
    {941, 2, {2, 940, 1}},
    {947, 1, {945, 1}},
    {947, 2, {2, 943, 1}},
    {953, 1, {950, 1}},
    {953, 2, {3, 947, 1}},
    {967, 1, {962, 1}},
    {967, 2, {5, 965, 1}},
    {971, 1, {965, 1}},
    {971, 2, {6, 970, 1}},
    {977, 1, {974, 1}},
    {977, 2, {3, 972, 1}},
    {983, 1, {978, 1}},
    {983, 2, {5, 981, 1}},
    {991, 1, {985, 1}},
    {991, 2, {6, 989, 1}},
    {997, 1, {990, 1}},
    {997, 2, {7, 995, 1}},
    {1009, 1, {998, 1}},
    {1009, 2, {11, 1008, 1}},
    {1013, 1, {1010, 1}},
    {1013, 2, {3, 1006, 1}},
    {1019, 1, {1017, 1}},
    {1019, 2, {2, 1015, 1}},
    {1021, 1, {1011, 1}},
    {1021, 2, {10, 1020, 1}},
    {1031, 1, {1017, 1}},
    {1031, 2, {14, 1029, 1}},
    {1033, 1, {1028, 1}},
    {1033, 2, {5, 1030, 1}},
    {1039, 1, {1036, 1}},
    {1039, 2, {3, 1033, 1}},
    {1049, 1, {1046, 1}},
    {1049, 2, {3, 1038, 1}},
    {1051, 1, {1044, 1}},
    {1051, 2, {7, 1049, 1}},
    {1061, 1, {1059, 1}},
    {1061, 2, {2, 1057, 1}},
    {1063, 1, {1060, 1}},
    {1063, 2, {3, 1062, 1}},
    {1069, 1, {1063, 1}},
    {1069, 2, {6, 1065, 1}},
    {1087, 1, {1084, 1}},
    {1087, 2, {3, 1085, 1}},
    {1091, 1, {1089, 1}},
    {1091, 2, {2, 1090, 1}},
    {1093, 1, {1088, 1}},
    {1093, 2, {5, 1092, 1}},
    {1097, 1, {1094, 1}},
    {1097, 2, {3, 1096, 1}},
    {1103, 1, {1098, 1}},
    {1103, 2, {5, 1091, 1}},
    {1109, 1, {1107, 1}},
    {1109, 2, {2, 1108, 1}},
    {1117, 1, {1115, 1}},
    {1117, 2, {2, 1113, 1}},
    {1123, 1, {1121, 1}},
    {1123, 2, {2, 1122, 1}},
    {1129, 1, {1118, 1}},
    {1129, 2, {11, 1124, 1}},
    {1151, 1, {1134, 1}},
    {1151, 2, {17, 1148, 1}},
    {1153, 1, {1148, 1}},
    {1153, 2, {5, 1152, 1}},
    {1163, 1, {1158, 1}},
    {1163, 2, {5, 1161, 1}},
    {1171, 1, {1169, 1}},
    {1171, 2, {2, 1167, 1}},
    {1181, 1, {1174, 1}},
    {1181, 2, {7, 1180, 1}},
    {1187, 1, {1185, 1}},
    {1187, 2, {2, 1181, 1}},
    {1193, 1, {1190, 1}},
    {1193, 2, {3, 1187, 1}},
    {1201, 1, {1190, 1}},
    {1201, 2, {11, 1192, 1}},
    {1213, 1, {1211, 1}},
    {1213, 2, {2, 1209, 1}},
    {1217, 1, {1214, 1}},
    {1217, 2, {3, 1211, 1}},
    {1223, 1, {1218, 1}},
    {1223, 2, {5, 1220, 1}},
    {1229, 1, {1227, 1}},
    {1229, 2, {2, 1225, 1}},
    {1231, 1, {1228, 1}},
    {1231, 2, {3, 1229, 1}},
    {1237, 1, {1235, 1}},
    {1237, 2, {2, 1236, 1}},
    {1249, 1, {1242, 1}},
    {1249, 2, {7, 1246, 1}},
    {1259, 1, {1257, 1}},
    {1259, 2, {2, 1258, 1}},
    {1277, 1, {1275, 1}},
    {1277, 2, {2, 1276, 1}},
    {1279, 1, {1276, 1}},
    {1279, 2, {3, 1277, 1}},
    {1283, 1, {1281, 1}},
    {1283, 2, {2, 1279, 1}},
    {1289, 1, {1283, 1}},
    {1289, 2, {6, 1280, 1}},
    {1291, 1, {1289, 1}},
    {1291, 2, {2, 1290, 1}},
    {1297, 1, {1287, 1}},
    {1297, 2, {10, 1294, 1}},
    {1301, 1, {1299, 1}},
    {1301, 2, {2, 1295, 1}},
    {1303, 1, {1297, 1}},
    {1303, 2, {6, 1302, 1}},
    {1307, 1, {1305, 1}},
    {1307, 2, {2, 1306, 1}},
    {1319, 1, {1306, 1}},
    {1319, 2, {13, 1316, 1}},
    {1321, 1, {1308, 1}},
    {1321, 2, {13, 1320, 1}},
    {1327, 1, {1324, 1}},
    {1327, 2, {3, 1326, 1}},
    {1361, 1, {1358, 1}},
    {1361, 2, {3, 1355, 1}},
    {1367, 1, {1362, 1}},
    {1367, 2, {5, 1365, 1}},
    {1373, 1, {1371, 1}},
    {1373, 2, {2, 1365, 1}},
    {1381, 1, {1379, 1}},
    {1381, 2, {2, 1377, 1}},
    {1399, 1, {1386, 1}},
    {1399, 2, {13, 1395, 1}},
    {1409, 1, {1406, 1}},
    {1409, 2, {3, 1404, 1}},
    {1423, 1, {1420, 1}},
    {1423, 2, {3, 1421, 1}},
    {1427, 1, {1425, 1}},
    {1427, 2, {2, 1426, 1}},
    {1429, 1, {1423, 1}},
    {1429, 2, {6, 1425, 1}},
    {1433, 1, {1430, 1}},
    {1433, 2, {3, 1420, 1}},
    {1439, 1, {1432, 1}},
    {1439, 2, {7, 1438, 1}},
    {1447, 1, {1444, 1}},
    {1447, 2, {3, 1446, 1}},
    {1451, 1, {1449, 1}},
    {1451, 2, {2, 1446, 1}},
    {1453, 1, {1451, 1}},
    {1453, 2, {2, 1449, 1}},
    {1459, 1, {1456, 1}},
    {1459, 2, {3, 1458, 1}},
    {1471, 1, {1465, 1}},
    {1471, 2, {6, 1470, 1}},
    {1481, 1, {1478, 1}},
    {1481, 2, {3, 1480, 1}},
    {1483, 1, {1481, 1}},
    {1483, 2, {2, 1482, 1}},
    {1487, 1, {1482, 1}},
    {1487, 2, {5, 1485, 1}},
    {1489, 1, {1475, 1}},
    {1489, 2, {14, 1487, 1}},
    {1493, 1, {1491, 1}},
    {1493, 2, {2, 1485, 1}},
    {1499, 1, {1497, 1}},
    {1499, 2, {2, 1495, 1}},
    {1511, 1, {1500, 1}},
    {1511, 2, {11, 1509, 1}},
    {1523, 1, {1521, 1}},
    {1523, 2, {2, 1518, 1}},
    {1531, 1, {1529, 1}},
    {1531, 2, {2, 1530, 1}},
    {1543, 1, {1538, 1}},
    {1543, 2, {5, 1541, 1}},
    {1549, 1, {1547, 1}},
    {1549, 2, {2, 1541, 1}},
    {1553, 1, {1550, 1}},
    {1553, 2, {3, 1552, 1}},
    {1559, 1, {1540, 1}},
    {1559, 2, {19, 1558, 1}},
    {1567, 1, {1564, 1}},
    {1567, 2, {3, 1565, 1}},
    {1571, 1, {1569, 1}},
    {1571, 2, {2, 1570, 1}},
    {1579, 1, {1576, 1}},
    {1579, 2, {3, 1578, 1}},
    {1583, 1, {1578, 1}},
    {1583, 2, {5, 1581, 1}},
    {1597, 1, {1586, 1}},
    {1597, 2, {11, 1594, 1}},
    {1601, 1, {1598, 1}},
    {1601, 2, {3, 1600, 1}},
    {1607, 1, {1602, 1}},
    {1607, 2, {5, 1605, 1}},
    {1609, 1, {1602, 1}},
    {1609, 2, {7, 1597, 1}},
    {1613, 1, {1610, 1}},
    {1613, 2, {3, 1606, 1}},
    {1619, 1, {1617, 1}},
    {1619, 2, {2, 1615, 1}},
    {1621, 1, {1619, 1}},
    {1621, 2, {2, 1617, 1}},
    {1627, 1, {1624, 1}},
    {1627, 2, {3, 1622, 1}},
    {1637, 1, {1635, 1}},
    {1637, 2, {2, 1633, 1}},
    {1657, 1, {1646, 1}},
    {1657, 2, {11, 1655, 1}},
    {1663, 1, {1660, 1}},
    {1663, 2, {3, 1662, 1}},
    {1667, 1, {1665, 1}},
    {1667, 2, {2, 1663, 1}},
    {1669, 1, {1667, 1}},
    {1669, 2, {2, 1665, 1}},
    {1693, 1, {1691, 1}},
    {1693, 2, {2, 1692, 1}},
    {1697, 1, {1694, 1}},
    {1697, 2, {3, 1692, 1}},
    {1699, 1, {1696, 1}},
    {1699, 2, {3, 1686, 1}},
    {1709, 1, {1706, 1}},
    {1709, 2, {3, 1696, 1}},
    {1721, 1, {1718, 1}},
    {1721, 2, {3, 1716, 1}},
    {1723, 1, {1720, 1}},
    {1723, 2, {3, 1722, 1}},
    {1733, 1, {1731, 1}},
    {1733, 2, {2, 1726, 1}},
    {1741, 1, {1739, 1}},
    {1741, 2, {2, 1740, 1}},
    {1747, 1, {1745, 1}},
    {1747, 2, {2, 1743, 1}},
    {1753, 1, {1746, 1}},
    {1753, 2, {7, 1746, 1}},
    {1759, 1, {1753, 1}},
    {1759, 2, {6, 1757, 1}},
    {1777, 1, {1772, 1}},
    {1777, 2, {5, 1774, 1}},
    {1783, 1, {1773, 1}},
    {1783, 2, {10, 1782, 1}},
    {1787, 1, {1785, 1}},
    {1787, 2, {2, 1783, 1}},
    {1789, 1, {1783, 1}},
    {1789, 2, {6, 1781, 1}},
    {1801, 1, {1790, 1}},
    {1801, 2, {11, 1796, 1}},
    {1811, 1, {1805, 1}},
    {1811, 2, {6, 1809, 1}},
    {1823, 1, {1818, 1}},
    {1823, 2, {5, 1822, 1}},
    {1831, 1, {1828, 1}},
    {1831, 2, {3, 1829, 1}},
    {1847, 1, {1842, 1}},
    {1847, 2, {5, 1845, 1}},
    {1861, 1, {1859, 1}},
    {1861, 2, {2, 1860, 1}},
    {1867, 1, {1865, 1}},
    {1867, 2, {2, 1866, 1}},
    {1871, 1, {1857, 1}},
    {1871, 2, {14, 1869, 1}},
    {1873, 1, {1863, 1}},
    {1873, 2, {10, 1870, 1}},
    {1877, 1, {1875, 1}},
    {1877, 2, {2, 1873, 1}},
    {1879, 1, {1873, 1}},
    {1879, 2, {6, 1877, 1}},
    {1889, 1, {1886, 1}},
    {1889, 2, {3, 1883, 1}},
    {1901, 1, {1899, 1}},
    {1901, 2, {2, 1896, 1}},
    {1907, 1, {1905, 1}},
    {1907, 2, {2, 1906, 1}},
    {1913, 1, {1910, 1}},
    {1913, 2, {3, 1908, 1}},
    {1931, 1, {1929, 1}},
    {1931, 2, {2, 1927, 1}},
    {1933, 1, {1928, 1}},
    {1933, 2, {5, 1932, 1}},
    {1949, 1, {1947, 1}},
    {1949, 2, {2, 1948, 1}},
    {1951, 1, {1948, 1}},
    {1951, 2, {3, 1949, 1}},
    {1973, 1, {1971, 1}},
    {1973, 2, {2, 1972, 1}},
    {1979, 1, {1977, 1}},
    {1979, 2, {2, 1975, 1}},
    {1987, 1, {1985, 1}},
    {1987, 2, {2, 1986, 1}},
    {1993, 1, {1988, 1}},
    {1993, 2, {5, 1990, 1}},
    {1997, 1, {1995, 1}},
    {1997, 2, {2, 1993, 1}},
    {1999, 1, {1996, 1}},
    {1999, 2, {3, 1998, 1}},
    {2003, 1, {1998, 1}},
    {2003, 2, {5, 2002, 1}},
    {2011, 1, {2008, 1}},
    {2011, 2, {3, 2004, 1}},
    {2017, 1, {2012, 1}},
    {2017, 2, {5, 2016, 1}},
    {2027, 1, {2025, 1}},
    {2027, 2, {2, 2021, 1}},
    {2029, 1, {2027, 1}},
    {2029, 2, {2, 2028, 1}},
    {2039, 1, {2032, 1}},
    {2039, 2, {7, 2026, 1}},
};

}  // namespace gcl::detail
