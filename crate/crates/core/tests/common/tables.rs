//! Published reference tables, transcribed verbatim.
#![allow(dead_code)]

pub const TABLE1_ETA: [f64; 3] = [0.1, 0.8, 1.5];
/// (ω, [[μ'₁..μ'₄] per η]).
pub const TABLE1: [(f64, [[f64; 4]; 3]); 30] = [
    (0.1, [[0.078, 0.039, 0.026, 0.019], [0.075, 0.036, 0.024, 0.018], [0.074, 0.036, 0.024, 0.018]]),
    (0.2, [[0.156, 0.081, 0.054, 0.041], [0.151, 0.075, 0.05, 0.037], [0.15, 0.075, 0.049, 0.036]]),
    (0.3, [[0.225, 0.121, 0.082, 0.062], [0.22, 0.114, 0.076, 0.056], [0.22, 0.114, 0.075, 0.056]]),
    (0.4, [[0.283, 0.159, 0.11, 0.084], [0.281, 0.152, 0.102, 0.076], [0.28, 0.151, 0.101, 0.075]]),
    (0.5, [[0.333, 0.194, 0.136, 0.104], [0.333, 0.188, 0.128, 0.096], [0.333, 0.187, 0.127, 0.095]]),
    (0.6, [[0.377, 0.227, 0.161, 0.124], [0.379, 0.221, 0.153, 0.116], [0.38, 0.22, 0.152, 0.115]]),
    (0.7, [[0.415, 0.257, 0.184, 0.144], [0.419, 0.252, 0.177, 0.135], [0.42, 0.251, 0.176, 0.134]]),
    (0.8, [[0.448, 0.284, 0.207, 0.162], [0.454, 0.281, 0.2, 0.154], [0.456, 0.281, 0.199, 0.152]]),
    (0.9, [[0.478, 0.31, 0.228, 0.18], [0.485, 0.308, 0.222, 0.172], [0.487, 0.308, 0.221, 0.17]]),
    (1.0, [[0.504, 0.333, 0.248, 0.197], [0.513, 0.333, 0.243, 0.19], [0.515, 0.333, 0.242, 0.188]]),
    (1.1, [[0.528, 0.355, 0.267, 0.213], [0.538, 0.357, 0.263, 0.206], [0.54, 0.357, 0.262, 0.205]]),
    (1.2, [[0.55, 0.376, 0.285, 0.228], [0.56, 0.378, 0.282, 0.223], [0.563, 0.379, 0.281, 0.221]]),
    (1.3, [[0.57, 0.395, 0.302, 0.243], [0.58, 0.399, 0.3, 0.238], [0.583, 0.4, 0.299, 0.237]]),
    (1.4, [[0.588, 0.413, 0.318, 0.258], [0.599, 0.418, 0.317, 0.254], [0.602, 0.419, 0.317, 0.252]]),
    (1.5, [[0.604, 0.43, 0.333, 0.271], [0.615, 0.436, 0.333, 0.268], [0.619, 0.437, 0.333, 0.267]]),
    (1.6, [[0.619, 0.447, 0.348, 0.285], [0.631, 0.452, 0.349, 0.282], [0.634, 0.454, 0.349, 0.281]]),
    (1.7, [[0.634, 0.462, 0.362, 0.298], [0.645, 0.468, 0.364, 0.296], [0.649, 0.47, 0.364, 0.295]]),
    (1.8, [[0.647, 0.476, 0.376, 0.31], [0.658, 0.483, 0.378, 0.309], [0.662, 0.485, 0.379, 0.308]]),
    (1.9, [[0.659, 0.49, 0.389, 0.322], [0.67, 0.497, 0.391, 0.321], [0.674, 0.499, 0.392, 0.321]]),
    (2.0, [[0.67, 0.502, 0.401, 0.333], [0.681, 0.51, 0.404, 0.333], [0.685, 0.513, 0.406, 0.333]]),
    (2.1, [[0.681, 0.515, 0.413, 0.344], [0.692, 0.523, 0.417, 0.345], [0.696, 0.526, 0.418, 0.345]]),
    (2.2, [[0.691, 0.526, 0.424, 0.355], [0.701, 0.534, 0.429, 0.356], [0.705, 0.538, 0.43, 0.357]]),
    (2.3, [[0.7, 0.537, 0.435, 0.366], [0.711, 0.546, 0.44, 0.367], [0.715, 0.549, 0.442, 0.368]]),
    (2.4, [[0.709, 0.548, 0.446, 0.376], [0.719, 0.556, 0.451, 0.378], [0.723, 0.56, 0.453, 0.378]]),
    (2.5, [[0.717, 0.558, 0.456, 0.385], [0.727, 0.567, 0.462, 0.388], [0.731, 0.57, 0.464, 0.389]]),
    (2.6, [[0.725, 0.568, 0.466, 0.395], [0.735, 0.576, 0.472, 0.398], [0.739, 0.58, 0.474, 0.399]]),
    (2.7, [[0.732, 0.577, 0.475, 0.404], [0.742, 0.586, 0.481, 0.407], [0.746, 0.589, 0.484, 0.408]]),
    (2.8, [[0.739, 0.586, 0.484, 0.413], [0.749, 0.595, 0.491, 0.416], [0.753, 0.598, 0.493, 0.418]]),
    (2.9, [[0.746, 0.594, 0.493, 0.421], [0.755, 0.603, 0.5, 0.425], [0.759, 0.607, 0.502, 0.427]]),
    (3.0, [[0.752, 0.602, 0.502, 0.43], [0.761, 0.611, 0.508, 0.434], [0.765, 0.615, 0.511, 0.435]]),
];

pub const TABLE2_ETA: [f64; 4] = [0.1, 0.8, 1.5, 3.0];
/// (ω, [[Var, SK, KU] per η]).
pub const TABLE2: [(f64, [[f64; 3]; 4]); 30] = [
    (0.1, [[0.033, 2.968, 11.66], [0.031, 3.066, 12.389], [0.031, 3.075, 12.456], [0.03, 3.08, 12.495]]),
    (0.2, [[0.056, 1.78, 5.285], [0.053, 1.847, 5.63], [0.052, 1.854, 5.668], [0.052, 1.859, 5.691]]),
    (0.3, [[0.071, 1.235, 3.436], [0.066, 1.281, 3.638], [0.065, 1.287, 3.663], [0.065, 1.29, 3.68]]),
    (0.4, [[0.079, 0.897, 2.636], [0.073, 0.929, 2.775], [0.072, 0.934, 2.796], [0.072, 0.937, 2.809]]),
    (0.5, [[0.083, 0.656, 2.23], [0.077, 0.679, 2.342], [0.076, 0.683, 2.36], [0.075, 0.686, 2.372]]),
    (0.6, [[0.085, 0.471, 2.014], [0.077, 0.488, 2.112], [0.076, 0.492, 2.129], [0.075, 0.495, 2.141]]),
    (0.7, [[0.085, 0.322, 1.9], [0.077, 0.334, 1.993], [0.075, 0.338, 2.011], [0.074, 0.341, 2.023]]),
    (0.8, [[0.083, 0.196, 1.848], [0.075, 0.206, 1.94], [0.073, 0.21, 1.958], [0.072, 0.213, 1.971]]),
    (0.9, [[0.081, 0.089, 1.836], [0.073, 0.096, 1.928], [0.071, 0.1, 1.947], [0.069, 0.105, 1.96]]),
    (1.0, [[0.079, -0.005, 1.849], [0.07, 0.0, 1.944], [0.068, 0.005, 1.964], [0.066, 0.01, 1.976]]),
    (1.1, [[0.076, -0.088, 1.881], [0.067, -0.085, 1.98], [0.065, -0.079, 1.999], [0.063, -0.073, 2.011]]),
    (1.2, [[0.074, -0.163, 1.925], [0.065, -0.162, 2.028], [0.062, -0.155, 2.048], [0.06, -0.147, 2.059]]),
    (1.3, [[0.071, -0.231, 1.979], [0.062, -0.231, 2.086], [0.06, -0.223, 2.105], [0.058, -0.214, 2.116]]),
    (1.4, [[0.068, -0.292, 2.038], [0.059, -0.293, 2.15], [0.057, -0.285, 2.17], [0.055, -0.275, 2.179]]),
    (1.5, [[0.065, -0.349, 2.103], [0.057, -0.351, 2.219], [0.054, -0.343, 2.239], [0.052, -0.331, 2.247]]),
    (1.6, [[0.063, -0.401, 2.17], [0.055, -0.405, 2.292], [0.052, -0.396, 2.312], [0.05, -0.383, 2.317]]),
    (1.7, [[0.06, -0.449, 2.24], [0.052, -0.454, 2.366], [0.05, -0.445, 2.387], [0.047, -0.431, 2.391]]),
    (1.8, [[0.058, -0.494, 2.311], [0.05, -0.501, 2.443], [0.047, -0.491, 2.464], [0.045, -0.475, 2.465]]),
    (1.9, [[0.056, -0.537, 2.383], [0.048, -0.544, 2.52], [0.045, -0.534, 2.542], [0.043, -0.517, 2.541]]),
    (2.0, [[0.053, -0.576, 2.456], [0.046, -0.584, 2.597], [0.043, -0.574, 2.62], [0.041, -0.556, 2.617]]),
    (2.1, [[0.051, -0.613, 2.528], [0.044, -0.623, 2.675], [0.042, -0.612, 2.698], [0.039, -0.594, 2.694]]),
    (2.2, [[0.049, -0.648, 2.6], [0.042, -0.659, 2.752], [0.04, -0.648, 2.776], [0.038, -0.629, 2.77]]),
    (2.3, [[0.047, -0.681, 2.672], [0.041, -0.693, 2.829], [0.038, -0.682, 2.854], [0.036, -0.662, 2.846]]),
    (2.4, [[0.045, -0.712, 2.744], [0.039, -0.725, 2.905], [0.037, -0.714, 2.932], [0.035, -0.693, 2.922]]),
    (2.5, [[0.044, -0.742, 2.814], [0.038, -0.756, 2.98], [0.035, -0.745, 3.008], [0.033, -0.723, 2.998]]),
    (2.6, [[0.042, -0.77, 2.884], [0.036, -0.785, 3.054], [0.034, -0.774, 3.084], [0.032, -0.752, 3.072]]),
    (2.7, [[0.041, -0.797, 2.953], [0.035, -0.812, 3.127], [0.033, -0.802, 3.159], [0.031, -0.779, 3.146]]),
    (2.8, [[0.039, -0.823, 3.021], [0.034, -0.839, 3.199], [0.032, -0.829, 3.233], [0.029, -0.805, 3.219]]),
    (2.9, [[0.038, -0.847, 3.088], [0.033, -0.864, 3.27], [0.03, -0.854, 3.306], [0.028, -0.83, 3.292]]),
    (3.0, [[0.036, -0.871, 3.154], [0.031, -0.888, 3.34], [0.029, -0.879, 3.378], [0.027, -0.854, 3.363]]),
];

/// Columns (ω, η) of the quantile table.
pub const TABLE3_PARAMS: [(f64, f64); 6] = [(0.5, 0.4), (0.5, 1.0), (1.0, 0.4), (1.0, 1.0), (1.5, 0.4), (1.5, 1.0)];
/// (p, quantile per column).
pub const TABLE3: [(f64, [f64; 6]); 14] = [
    (0.01, [0.0006, 0.0011, 0.0192, 0.0272, 0.065, 0.0818]),
    (0.05, [0.008, 0.0102, 0.0779, 0.0926, 0.1723, 0.1954]),
    (0.1, [0.0224, 0.0262, 0.1374, 0.1533, 0.2564, 0.2782]),
    (0.25, [0.088, 0.0933, 0.2869, 0.2992, 0.4284, 0.4424]),
    (0.4, [0.1821, 0.1861, 0.4214, 0.4281, 0.5589, 0.5657]),
    (0.5, [0.2615, 0.2635, 0.5091, 0.5119, 0.6363, 0.639]),
    (0.55, [0.3067, 0.3075, 0.5531, 0.554, 0.6734, 0.6743]),
    (0.57, [0.326, 0.3262, 0.5708, 0.571, 0.688, 0.6882]),
    (0.58, [0.3359, 0.3358, 0.5797, 0.5795, 0.6952, 0.6952]),
    (0.6, [0.3562, 0.3555, 0.5975, 0.5967, 0.7097, 0.709]),
    (0.75, [0.5347, 0.5292, 0.7353, 0.7301, 0.8166, 0.8124]),
    (0.9, [0.777, 0.7693, 0.886, 0.8802, 0.9244, 0.9201]),
    (0.95, [0.88, 0.8741, 0.9411, 0.9372, 0.9616, 0.9588]),
    (0.99, [0.9743, 0.9726, 0.9879, 0.9868, 0.9922, 0.9915]),
];

pub const TABLE4_ETA: [f64; 10] = [0.2, 0.5, 0.7, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 4.0];
/// (ω, entropy per η).
pub const TABLE4: [(f64, [f64; 10]); 12] = [
    (0.1, [-3.4946, -3.5412, -3.5511, -3.5568, -3.5588, -3.5605, -3.5649, -3.568, -3.5712, -3.5728]),
    (0.2, [-1.7715, -1.7418, -1.735, -1.7311, -1.7297, -1.7286, -1.7254, -1.7232, -1.721, -1.7198]),
    (0.3, [-0.8691, -0.824, -0.8132, -0.8069, -0.8046, -0.8027, -0.7975, -0.7938, -0.7901, -0.7882]),
    (0.5, [-0.2268, -0.204, -0.1984, -0.1951, -0.1939, -0.193, -0.1904, -0.1886, -0.1868, -0.1859]),
    (0.7, [-0.0469, -0.0414, -0.0407, -0.0405, -0.0405, -0.0405, -0.0408, -0.0411, -0.0417, -0.042]),
    (0.9, [-0.0043, -0.0092, -0.012, -0.0142, -0.0151, -0.0159, -0.0185, -0.0207, -0.0233, -0.0248]),
    (1.0, [-0.0052, -0.0138, -0.0179, -0.021, -0.0223, -0.0235, -0.0271, -0.0301, -0.0336, -0.0356]),
    (1.1, [-0.0143, -0.0259, -0.0311, -0.035, -0.0367, -0.0381, -0.0426, -0.0463, -0.0507, -0.0533]),
    (1.5, [-0.091, -0.1093, -0.1176, -0.1239, -0.1265, -0.1288, -0.1361, -0.1423, -0.1498, -0.1542]),
    (2.0, [-0.2143, -0.2357, -0.2457, -0.2536, -0.257, -0.26, -0.2696, -0.278, -0.2884, -0.2946]),
    (2.5, [-0.337, -0.359, -0.3697, -0.3784, -0.3821, -0.3855, -0.3966, -0.4065, -0.4191, -0.4268]),
    (3.0, [-0.4515, -0.473, -0.484, -0.493, -0.4969, -0.5005, -0.5124, -0.5233, -0.5376, -0.5466]),
];

/// (ω, η, n, [Bias ω̂, Bias η̂, MSE ω̂, MSE η̂, MRE ω̂, MRE η̂, CP ω, CP η, CR]).
pub const TABLE6: [(f64, f64, usize, [f64; 9]); 35] = [
    (0.6, 0.2, 30, [0.0305, 0.0889, 0.0139, 0.059, 0.3019, 0.7618, 0.9456, 0.9379, 0.972]),
    (0.6, 0.2, 60, [0.023, 0.084, 0.0081, 0.0535, 0.2285, 0.7066, 0.9474, 0.9395, 0.969]),
    (0.6, 0.2, 100, [0.0185, 0.0389, 0.0045, 0.0285, 0.1707, 0.517, 0.9419, 0.9498, 0.973]),
    (0.6, 0.2, 150, [0.0145, 0.0303, 0.0033, 0.0262, 0.1507, 0.4784, 0.9529, 0.9476, 0.969]),
    (0.6, 0.2, 200, [0.0124, 0.0254, 0.0024, 0.0224, 0.1288, 0.4487, 0.9498, 0.948, 0.978]),
    (0.6, 1.8, 30, [0.0401, 0.1502, 0.0144, 0.7765, 0.0993, 0.4454, 0.9465, 0.9404, 0.976]),
    (0.6, 1.8, 60, [0.029, 0.1157, 0.0076, 0.697, 0.0749, 0.408, 0.9454, 0.9428, 0.973]),
    (0.6, 1.8, 100, [0.017, 0.0239, 0.0041, 0.1814, 0.0548, 0.1409, 0.9415, 0.9457, 0.983]),
    (0.6, 1.8, 150, [0.0127, 0.019, 0.0026, 0.1068, 0.0435, 0.1013, 0.9549, 0.9485, 0.975]),
    (0.6, 1.8, 200, [0.0114, 0.0081, 0.0019, 0.0454, 0.0377, 0.0871, 0.9545, 0.9465, 0.98]),
    (1.0, 0.7, 30, [0.0582, 0.2135, 0.0424, 0.5668, 0.1882, 0.7689, 0.9418, 0.9438, 0.975]),
    (1.0, 0.7, 60, [0.0349, 0.1939, 0.0201, 0.5018, 0.1347, 0.693, 0.9491, 0.9436, 0.977]),
    (1.0, 0.7, 100, [0.026, 0.0689, 0.0125, 0.2747, 0.106, 0.5931, 0.9531, 0.9379, 0.962]),
    (1.0, 0.7, 150, [0.0182, 0.0505, 0.0078, 0.1354, 0.0846, 0.4375, 0.9574, 0.9418, 0.959]),
    (1.0, 0.7, 200, [0.0144, 0.0017, 0.0067, 0.0973, 0.0768, 0.3305, 0.9474, 0.9455, 0.967]),
    (1.2, 0.8, 30, [0.0686, 0.0679, 0.0572, 0.3763, 0.1948, 0.6159, 0.9309, 0.935, 0.974]),
    (1.2, 0.8, 60, [0.0439, 0.0397, 0.028, 0.3584, 0.1366, 0.5947, 0.9452, 0.9426, 0.987]),
    (1.2, 0.8, 100, [0.0264, 0.011, 0.0155, 0.2556, 0.1, 0.4914, 0.9483, 0.9439, 0.973]),
    (1.2, 0.8, 150, [0.0206, 0.0103, 0.0108, 0.1594, 0.0846, 0.3589, 0.9498, 0.9427, 0.996]),
    (1.2, 0.8, 200, [0.0165, 0.0098, 0.0095, 0.0763, 0.0804, 0.2952, 0.9469, 0.9498, 0.985]),
    (1.5, 0.2, 30, [0.0305, 0.0802, 0.0805, 0.0598, 0.6346, 0.6568, 0.9471, 0.943, 0.988]),
    (1.5, 0.2, 60, [0.0264, 0.0486, 0.0435, 0.0519, 0.4689, 0.6072, 0.9478, 0.9407, 0.983]),
    (1.5, 0.2, 100, [0.02, 0.0072, 0.0265, 0.0305, 0.3663, 0.4623, 0.9504, 0.9574, 0.992]),
    (1.5, 0.2, 150, [0.0141, 0.0049, 0.0179, 0.0275, 0.2933, 0.4337, 0.9473, 0.9564, 0.991]),
    (1.5, 0.2, 200, [0.0091, 0.0017, 0.0116, 0.0153, 0.1599, 0.2855, 0.9476, 0.9507, 0.995]),
    (2.0, 0.6, 30, [0.0851, 0.0803, 0.1461, 0.2972, 0.3322, 0.5627, 0.9396, 0.9366, 0.996]),
    (2.0, 0.6, 60, [0.0446, 0.0788, 0.0767, 0.2329, 0.2319, 0.5338, 0.9589, 0.9548, 0.998]),
    (2.0, 0.6, 100, [0.039, 0.0351, 0.0474, 0.1952, 0.1872, 0.4601, 0.9476, 0.9406, 0.995]),
    (2.0, 0.6, 150, [0.018, 0.0527, 0.0321, 0.1205, 0.1589, 0.4183, 0.9469, 0.9368, 0.998]),
    (2.0, 0.6, 200, [0.0072, 0.0065, 0.0142, 0.0261, 0.1244, 0.3298, 0.9579, 0.9469, 0.998]),
    (2.0, 1.4, 30, [0.0666, 0.0669, 0.1237, 0.6743, 0.17, 0.5361, 0.9493, 0.9438, 0.991]),
    (2.0, 1.4, 60, [0.0562, 0.061, 0.0711, 0.5084, 0.1264, 0.5098, 0.9457, 0.9486, 0.996]),
    (2.0, 1.4, 100, [0.0472, 0.0539, 0.048, 0.3296, 0.1043, 0.4539, 0.96, 0.953, 1.0]),
    (2.0, 1.4, 150, [0.0209, 0.017, 0.0301, 0.0692, 0.0819, 0.341, 0.9648, 0.9557, 0.997]),
    (2.0, 1.4, 200, [0.008, 0.0062, 0.0247, 0.0495, 0.072, 0.202, 0.9509, 0.9539, 0.999]),
];

/// Family tag, estimates, [AIC, AICC, BIC, HQIC, KS, p-value].
pub type FitRow = (&'static str, &'static [f64], [f64; 6]);

pub const TABLE8: [FitRow; 8] = [
    ("USh", &[1.4957, 0.1221], [-3.1059, -2.8059, 0.4165, -1.8069, 0.0726, 0.9772]),
    ("Kw", &[1.0177, 1.559], [-3.0158, -2.7158, 0.5066, -1.7169, 0.0813, 0.939]),
    ("UB", &[1.2819, 0.9874], [11.4709, 11.7709, 14.9933, 12.7699, 0.1457, 0.3205]),
    ("UE", &[1.7603, 0.2293], [2.5036, 2.8036, 6.026, 3.8026, 0.1317, 0.4447]),
    ("EUEHL", &[0.075, 1.0012, 40.3039], [-1.0279, -0.4125, 4.2557, 0.9205, 0.0799, 0.9465]),
    ("UEL", &[54.3925, 0.0294, 1.0319], [-0.9877, -0.3724, 4.2959, 0.9607, 0.0819, 0.935]),
    ("Beta", &[1.5613, 1.0173], [-3.0159, -2.7159, 0.5065, -1.717, 0.0812, 0.9393]),
    ("TL", &[3.0122], [15.9571, 16.0546, 17.7183, 16.6065, 0.1877, 0.0965]),
];

pub const TABLE9: [FitRow; 8] = [
    ("USh", &[0.374, 193.1469], [-15.7077, -15.1077, -13.4367, -15.1366, 0.1512, 0.6694]),
    ("Kw", &[1.1862, 0.5044], [-15.3416, -14.7416, -13.0706, -14.7704, 0.179, 0.4529]),
    ("UB", &[2.0102, 5.3038], [-11.2158, -10.6158, -8.9448, -10.6446, 0.1786, 0.4553]),
    ("UE", &[107.6512, 0.0126], [-9.0515, -8.4515, -6.7805, -8.4804, 0.2941, 0.0374]),
    ("EUEHL", &[0.3132, 1.0549, 2.4651], [-14.6813, -13.4181, -11.2748, -13.8246, 0.1584, 0.6112]),
    ("UEL", &[52.1005, 0.0099, 1.2034], [-13.16, -11.8968, -9.7535, -12.3033, 0.1808, 0.44]),
    ("Beta", &[0.4869, 1.1679], [-15.2149, -14.6149, -12.9439, -14.6438, 0.1836, 0.4202]),
    ("TL", &[0.5943], [-14.2302, -14.0398, -13.0948, -13.9447, 0.169, 0.5272]),
];

pub const TABLE10: [FitRow; 8] = [
    ("USh", &[0.4159, 1000.0], [-10.1225, -9.491, -7.9405, -9.6085, 0.176, 0.5029]),
    ("Kw", &[1.2305, 0.5718], [-9.6872, -9.0557, -7.5051, -9.1732, 0.1963, 0.365]),
    ("UB", &[1.7316, 4.1212], [-6.3672, -5.7357, -4.1852, -5.8532, 0.1827, 0.4546]),
    ("UE", &[93.4921, 0.0137], [-6.7942, -6.1626, -4.6121, -6.2802, 0.2824, 0.0598]),
    ("EUEHL", &[0.34, 1.0911, 2.6393], [-9.0181, -7.6847, -5.7449, -8.247, 0.1788, 0.4828]),
    ("UEL", &[54.3238, 0.0107, 1.2387], [-7.5177, -6.1844, -4.2446, -6.7467, 0.1968, 0.3616]),
    ("Beta", &[0.554, 1.2198], [-9.5638, -8.9323, -7.3818, -9.0498, 0.2002, 0.3413]),
    ("TL", &[0.6778], [-8.9965, -8.7965, -7.9055, -8.7395, 0.1848, 0.4401]),
];

pub const TABLE11: [FitRow; 8] = [
    ("USh", &[0.8854, 545.452], [-0.2354, 0.209, 2.567, 0.6611, 0.1296, 0.6478]),
    ("Kw", &[1.4896, 1.3281], [1.5721, 2.0166, 4.3745, 2.4686, 0.1304, 0.6401]),
    ("UB", &[0.9848, 1.1287], [2.9225, 3.367, 5.7249, 3.819, 0.0881, 0.9581]),
    ("UE", &[7.8993, 0.0945], [4.6855, 5.13, 7.4879, 5.582, 0.154, 0.4318]),
    ("EUEHL", &[1.2418, 1.2371, 1.4679], [1.4424, 2.3655, 5.646, 2.7872, 0.102, 0.883]),
    ("UEL", &[91.3279, 0.0148, 1.501], [3.7091, 4.6322, 7.9127, 5.0539, 0.1316, 0.6287]),
    ("Beta", &[1.3856, 1.5036], [1.4478, 1.8922, 4.2502, 2.3443, 0.1288, 0.6548]),
    ("TL", &[1.8705], [1.0529, 1.1957, 2.4541, 1.5011, 0.0909, 0.9461]),
];

/// [Min, Q1, Median, Mean, Q3, Max, Var, SK, KU].
pub const TABLE7: [(&str, [f64; 9]); 4] = [
    ("data1", [0.058, 0.424, 0.635, 0.605, 0.806, 0.998, 0.066, -0.442, 5.279]),
    ("data2", [0.006, 0.032, 0.116, 0.288, 0.518, 0.866, 0.101, 0.768, 4.974]),
    ("data3", [0.01, 0.047, 0.118, 0.304, 0.544, 0.874, 0.101, 0.711, 4.884]),
    ("data4", [0.067, 0.286, 0.448, 0.459, 0.595, 0.992, 0.058, 0.388, 5.645]),
];
