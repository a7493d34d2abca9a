"""Reference table values, five decimals, rows t = -10 .. 10."""

PI_N = {1: 3.142, 2: 2.622, 3: 2.429}

# t, sleaf2, cleaf2, int_sleaf2, int_cleaf2
LEAF2 = [
    (-10.0, 0.48547, 0.78647, 0.11895, 0.45195),
    (-9.0, 0.96908, -0.17718, 0.96076, 0.76969),
    (-8.0, 0.13382, -0.98225, 1.56184, 0.13303),
    (-7.0, -0.81960, -0.44312, 1.20252, -0.68658),
    (-6.0, -0.73186, 0.54991, 0.28262, -0.63179),
    (-5.0, 0.24402, 0.94212, 0.02979, 0.23935),
    (-4.0, 0.99553, 0.06691, 0.71858, 0.78315),
    (-3.0, 0.37717, -0.86655, 1.49942, 0.36067),
    (-2.0, -0.61286, -0.67373, 1.37828, -0.54982),
    (-1.0, -0.90768, 0.31073, 0.48411, -0.73704),
    (0.0, 0.00000, 1.00000, 0.00000, 0.00000),
    (1.0, 0.90768, 0.31073, 0.48411, 0.73704),
    (2.0, 0.61285, -0.67373, 1.37828, 0.54982),
    (3.0, -0.37717, -0.86655, 1.49942, -0.36067),
    (4.0, -0.99553, 0.06691, 0.71858, -0.78316),
    (5.0, -0.24403, 0.94212, 0.02979, -0.23935),
    (6.0, 0.73186, 0.54991, 0.28262, 0.63179),
    (7.0, 0.81960, -0.44312, 1.20252, 0.68657),
    (8.0, -0.13382, -0.98225, 1.56184, -0.13303),
    (9.0, -0.96908, -0.17718, 0.96076, -0.76970),
    (10.0, -0.48547, 0.78647, 0.11895, -0.45196),
]

# t, x, x^3, a, a - 3x + 4x^3
TYPE_I = [
    (-10.0, 0.89959, 0.72801, -0.21327, -0.00000),
    (-9.0, 0.71812, 0.37033, 0.67303, 0.00000),
    (-8.0, 0.99116, 0.97372, -0.92141, 0.00000),
    (-7.0, 0.77341, 0.46264, 0.46969, -0.00000),
    (-6.0, 0.80697, 0.52550, 0.31890, 0.00000),
    (-5.0, 0.97149, 0.91689, -0.75308, -0.00000),
    (-4.0, 0.70868, 0.35593, 0.70234, 0.00000),
    (-3.0, 0.93565, 0.81913, -0.46954, 0.00000),
    (-2.0, 0.85261, 0.61981, 0.07858, 0.00000),
    (-1.0, 0.74045, 0.40597, 0.59746, -0.00000),
    (0.0, 1.00000, 1.00000, -1.00000, 0.00000),
    (1.0, 0.74045, 0.40597, 0.59746, -0.00000),
    (2.0, 0.85261, 0.61981, 0.07858, 0.00000),
    (3.0, 0.93565, 0.81913, -0.46954, 0.00000),
    (4.0, 0.70868, 0.35593, 0.70234, 0.00000),
    (5.0, 0.97149, 0.91689, -0.75308, -0.00000),
    (6.0, 0.80697, 0.52550, 0.31890, 0.00000),
    (7.0, 0.77341, 0.46264, 0.46969, -0.00000),
    (8.0, 0.99116, 0.97372, -0.92141, 0.00000),
    (9.0, 0.71812, 0.37033, 0.67303, 0.00000),
    (10.0, 0.89959, 0.72801, -0.21327, -0.00000),
]

# t, x, x^3, a, a + 3x - 4x^3
TYPE_II = [
    (-10.0, 0.43672, 0.08329, -0.97699, 0.00000),
    (-9.0, 0.69591, 0.33703, -0.73961, 0.00000),
    (-8.0, 0.13263, 0.00233, -0.38858, -0.00000),
    (-7.0, -0.63389, -0.25471, 0.88283, 0.00000),
    (-6.0, -0.59059, -0.20599, 0.94778, -0.00000),
    (-5.0, 0.23707, 0.01332, -0.65791, 0.00000),
    (-4.0, 0.70552, 0.35118, -0.71184, 0.00000),
    (-3.0, 0.35290, 0.04395, -0.88290, -0.00000),
    (-2.0, -0.52253, -0.14267, 0.99690, -0.00000),
    (-1.0, -0.67210, -0.30360, 0.80189, 0.00000),
    (0.0, 0.00000, 0.00000, 0.00000, 0.00000),
    (1.0, 0.67210, 0.30360, -0.80189, -0.00000),
    (2.0, 0.52253, 0.14267, -0.99690, 0.00000),
    (3.0, -0.35290, -0.04395, 0.88290, 0.00000),
    (4.0, -0.70552, -0.35118, 0.71184, -0.00000),
    (5.0, -0.23707, -0.01332, 0.65791, -0.00000),
    (6.0, 0.59059, 0.20599, -0.94778, 0.00000),
    (7.0, 0.63389, 0.25471, -0.88283, -0.00000),
    (8.0, -0.13263, -0.00233, 0.38858, 0.00000),
    (9.0, -0.69591, -0.33703, 0.73961, -0.00000),
    (10.0, -0.43672, -0.08329, 0.97699, -0.00000),
]

# t, cosF, sinF, x, x^3, a, a - 3x + 2x^3
TYPE_III = [
    (-10.0, 0.99293, 0.11867, 1.11161, 1.37359, 0.58764, 0.00000),
    (-9.0, 0.57289, 0.81962, 1.39252, 2.70027, -1.22297, 0.00000),
    (-8.0, 0.00895, 0.99995, 1.00891, 1.02698, 0.97277, 0.00000),
    (-7.0, 0.36000, 0.93294, 1.29295, 2.16148, -0.44410, 0.00000),
    (-6.0, 0.96032, 0.27887, 1.23920, 1.90294, -0.08828, 0.00000),
    (-5.0, 0.99955, 0.02978, 1.02934, 1.09064, 0.90674, 0.00000),
    (-4.0, 0.75273, 0.65831, 1.41105, 2.80953, -1.38589, 0.00000),
    (-3.0, 0.07131, 0.99745, 1.06876, 1.22082, 0.76466, 0.00000),
    (-2.0, 0.19132, 0.98152, 1.17285, 1.61336, 0.29183, 0.00000),
    (-1.0, 0.88508, 0.46542, 1.35051, 2.46318, -0.87483, 0.00000),
    (0.0, 1.00000, 0.00000, 1.00000, 1.00000, 1.00000, 0.00000),
    (1.0, 0.88508, 0.46542, 1.35051, 2.46318, -0.87483, 0.00000),
    (2.0, 0.19132, 0.98152, 1.17285, 1.61336, 0.29183, 0.00000),
    (3.0, 0.07131, 0.99745, 1.06876, 1.22082, 0.76466, 0.00000),
    (4.0, 0.75273, 0.65831, 1.41105, 2.80953, -1.38589, 0.00000),
    (5.0, 0.99955, 0.02978, 1.02934, 1.09064, 0.90674, 0.00000),
    (6.0, 0.96032, 0.27887, 1.23920, 1.90294, -0.08828, 0.00000),
    (7.0, 0.36000, 0.93294, 1.29295, 2.16148, -0.44410, 0.00000),
    (8.0, 0.00895, 0.99995, 1.00891, 1.02698, 0.97277, 0.00000),
    (9.0, 0.57289, 0.81962, 1.39252, 2.70027, -1.22297, 0.00000),
    (10.0, 0.99293, 0.11867, 1.11161, 1.37359, 0.58764, 0.00000),
]
