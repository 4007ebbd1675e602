//! Published bound values, indexed by `2j` from [`FIRST_TWICE`] or [`FIRST_TWICE_POW`] upward in steps of one.

#![allow(dead_code)]

/// `2j` of the first entry in the jsq-pair and anticommutator lists.
pub const FIRST_TWICE: u32 = 3;
/// `2j` of the first entry in the power-vector lists.
pub const FIRST_TWICE_POW: u32 = 2;

/// Jsq pair, minimum of h.
pub const JSQ_H: [f64; 98] = [
    0.491551, 0.491551, 0.41986, 0.427261, 0.351636, 0.356853, 0.302929, 0.30647,
    0.266717, 0.269349, 0.238819, 0.240789, 0.216628, 0.218167, 0.198523, 0.199764,
    0.183432, 0.184472, 0.170624, 0.171533, 0.15963, 0.160408, 0.15008, 0.150755,
    0.141701, 0.142292, 0.134283, 0.134806, 0.127667, 0.128132, 0.121724, 0.122142,
    0.116355, 0.116733, 0.111478, 0.111821, 0.107026, 0.107339, 0.102945, 0.103232,
    0.0991885, 0.0994531, 0.0957188, 0.0959634, 0.0925031, 0.0927299, 0.0895138, 0.0897248,
    0.0867271, 0.0869239, 0.0841192, 0.0843066, 0.0816738, 0.0818534, 0.0793778, 0.0795465,
    0.0772175, 0.0773764, 0.0751809, 0.0753308, 0.0732574, 0.0733991, 0.0714375, 0.0715717,
    0.0697129, 0.0698402, 0.0680761, 0.068197, 0.0665204, 0.0666353, 0.0650396, 0.0651491,
    0.0636285, 0.0637329, 0.062282, 0.0623817, 0.0609957, 0.061091, 0.0597655, 0.0598567,
    0.0585877, 0.0586752, 0.0574591, 0.0575429, 0.0563764, 0.0564569, 0.0553368, 0.0554142,
    0.0543379, 0.0544122, 0.053377, 0.0534486, 0.0524522, 0.0525211, 0.0515612, 0.0516277,
    0.0507023, 0.0507664,
];

/// Jsq pair, minimum of u_1/2.
pub const JSQ_U_HALF: [f64; 98] = [
    2.36603, 2.36603, 2.32112, 2.32112, 2.28897, 2.28897, 2.26491, 2.26491,
    2.2461, 2.2461, 2.23089, 2.23089, 2.21825, 2.21825, 2.20753, 2.20753,
    2.19829, 2.19829, 2.19021, 2.19021, 2.18307, 2.18307, 2.1767, 2.1767,
    2.17096, 2.17096, 2.16577, 2.16577, 2.16103, 2.16103, 2.15668, 2.15668,
    2.15268, 2.15268, 2.14898, 2.14898, 2.14553, 2.14553, 2.14233, 2.14233,
    2.13933, 2.13933, 2.13651, 2.13651, 2.13387, 2.13387, 2.13137, 2.13137,
    2.12901, 2.12901, 2.12678, 2.12678, 2.12466, 2.12466, 2.12265, 2.12265,
    2.12073, 2.12073, 2.1189, 2.1189, 2.11716, 2.11716, 2.11549, 2.11549,
    2.11389, 2.11389, 2.11235, 2.11235, 2.11088, 2.11088, 2.10947, 2.10947,
    2.10811, 2.10811, 2.1068, 2.1068, 2.10553, 2.10553, 2.10432, 2.10432,
    2.10314, 2.10314, 2.102, 2.102, 2.1009, 2.1009, 2.09984, 2.09984,
    2.09881, 2.09881, 2.09781, 2.09781, 2.09684, 2.09684, 2.0959, 2.0959,
    2.09499, 2.09499,
];

/// Jsq pair, maximum of u_2.
pub const JSQ_U2: [f64; 98] = [
    1.75, 1.75, 1.78071, 1.7736, 1.82246, 1.81637, 1.85267, 1.84851,
    1.87446, 1.87161, 1.89076, 1.88872, 1.90336, 1.90183, 1.91337, 1.91219,
    1.92153, 1.92058, 1.9283, 1.92752, 1.93399, 1.93334, 1.93885, 1.9383,
    1.94304, 1.94257, 1.9467, 1.94629, 1.94992, 1.94956, 1.95277, 1.95245,
    1.95531, 1.95503, 1.9576, 1.95735, 1.95966, 1.95944, 1.96153, 1.96133,
    1.96324, 1.96305, 1.9648, 1.96463, 1.96623, 1.96608, 1.96755, 1.96741,
    1.96878, 1.96864, 1.96991, 1.96979, 1.97096, 1.97085, 1.97195, 1.97184,
    1.97287, 1.97277, 1.97373, 1.97363, 1.97453, 1.97445, 1.97529, 1.97521,
    1.97601, 1.97593, 1.97668, 1.97661, 1.97732, 1.97725, 1.97792, 1.97786,
    1.9785, 1.97844, 1.97904, 1.97898, 1.97956, 1.9795, 1.98005, 1.98,
    1.98052, 1.98047, 1.98097, 1.98092, 1.98139, 1.98135, 1.9818, 1.98176,
    1.98219, 1.98215, 1.98257, 1.98253, 1.98293, 1.98289, 1.98327, 1.98324,
    1.9836, 1.98357,
];

/// Jsq pair, maximum of u_max.
pub const JSQ_UMAX: [f64; 98] = [
    1.86603, 1.86603, 1.88192, 1.87766, 1.9052, 1.90139, 1.92211, 1.91953,
    1.93416, 1.93244, 1.94306, 1.94186, 1.94988, 1.94899, 1.95525, 1.95458,
    1.95959, 1.95906, 1.96317, 1.96274, 1.96616, 1.96581, 1.96871, 1.96841,
    1.9709, 1.97065, 1.97281, 1.97259, 1.97448, 1.97429, 1.97596, 1.97579,
    1.97728, 1.97713, 1.97846, 1.97832, 1.97952, 1.9794, 1.98049, 1.98038,
    1.98136, 1.98127, 1.98216, 1.98208, 1.9829, 1.98282, 1.98358, 1.9835,
    1.9842, 1.98413, 1.98478, 1.98472, 1.98532, 1.98526, 1.98582, 1.98577,
    1.98629, 1.98624, 1.98673, 1.98668, 1.98714, 1.9871, 1.98753, 1.98749,
    1.98789, 1.98786, 1.98824, 1.9882, 1.98856, 1.98853, 1.98887, 1.98884,
    1.98916, 1.98913, 1.98944, 1.98941, 1.9897, 1.98967, 1.98995, 1.98992,
    1.99019, 1.99016, 1.99042, 1.99039, 1.99063, 1.99061, 1.99084, 1.99082,
    1.99104, 1.99102, 1.99123, 1.99121, 1.99141, 1.99139, 1.99158, 1.99156,
    1.99175, 1.99173,
];

/// Anticommutators, first-coordinate mean on the eta_1 face over a_M.
pub const ANTICOMM_MEAN_ETA1: [f64; 98] = [
    0.57735, 0.57735, 0.629941, 0.632993, 0.644427, 0.64715, 0.650684, 0.652506,
    0.654182, 0.65539, 0.656421, 0.65726, 0.657979, 0.658592, 0.659125, 0.659592,
    0.660004, 0.660371, 0.660699, 0.660995, 0.661263, 0.661507, 0.66173, 0.661934,
    0.662122, 0.662296, 0.662457, 0.662606, 0.662745, 0.662875, 0.662997, 0.663111,
    0.663218, 0.663319, 0.663414, 0.663504, 0.663589, 0.66367, 0.663747, 0.663819,
    0.663888, 0.663954, 0.664017, 0.664077, 0.664134, 0.664189, 0.664242, 0.664292,
    0.66434, 0.664387, 0.664431, 0.664474, 0.664515, 0.664555, 0.664593, 0.66463,
    0.664666, 0.6647, 0.664734, 0.664766, 0.664797, 0.664827, 0.664856, 0.664884,
    0.664912, 0.664938, 0.664964, 0.664989, 0.665013, 0.665037, 0.66506, 0.665082,
    0.665103, 0.665125, 0.665145, 0.665165, 0.665184, 0.665203, 0.665222, 0.66524,
    0.665258, 0.665275, 0.665291, 0.665308, 0.665324, 0.665339, 0.665355, 0.665369,
    0.665384, 0.665398, 0.665412, 0.665426, 0.665439, 0.665452, 0.665465, 0.665477,
    0.66549, 0.665502,
];

/// Anticommutators, minimum of h.
pub const ANTICOMM_H: [f64; 98] = [
    1.38629, 1.38629, 1.38629, 1.38629, 1.38629, 1.38629, 1.38629, 1.38533,
    1.38141, 1.37857, 1.37614, 1.37415, 1.37246, 1.371, 1.36974, 1.36863,
    1.36765, 1.36678, 1.36599, 1.36529, 1.36465, 1.36407, 1.36354, 1.36305,
    1.3626, 1.36218, 1.3618, 1.36144, 1.36111, 1.3608, 1.36051, 1.36023,
    1.35998, 1.35973, 1.35951, 1.35929, 1.35909, 1.35889, 1.35871, 1.35854,
    1.35837, 1.35821, 1.35806, 1.35792, 1.35778, 1.35765, 1.35752, 1.3574,
    1.35728, 1.35717, 1.35707, 1.35696, 1.35686, 1.35677, 1.35668, 1.35659,
    1.3565, 1.35642, 1.35634, 1.35626, 1.35619, 1.35612, 1.35605, 1.35598,
    1.35591, 1.35585, 1.35579, 1.35573, 1.35567, 1.35561, 1.35556, 1.3555,
    1.35545, 1.3554, 1.35535, 1.3553, 1.35526, 1.35521, 1.35517, 1.35512,
    1.35508, 1.35504, 1.355, 1.35496, 1.35492, 1.35488, 1.35485, 1.35481,
    1.35478, 1.35474, 1.35471, 1.35468, 1.35464, 1.35461, 1.35458, 1.35455,
    1.35452, 1.35449,
];

/// Anticommutators, maximum of u_2.
pub const ANTICOMM_U2: [f64; 98] = [
    2.0, 2.0, 2.09524, 2.10102, 2.12293, 2.12821, 2.13508, 2.13865,
    2.14193, 2.1443, 2.14633, 2.14799, 2.1494, 2.15061, 2.15167, 2.15259,
    2.15341, 2.15413, 2.15479, 2.15537, 2.1559, 2.15639, 2.15683, 2.15723,
    2.15761, 2.15795, 2.15827, 2.15857, 2.15885, 2.15911, 2.15935, 2.15957,
    2.15979, 2.15999, 2.16018, 2.16036, 2.16053, 2.16069, 2.16084, 2.16098,
    2.16112, 2.16125, 2.16138, 2.1615, 2.16161, 2.16172, 2.16183, 2.16193,
    2.16202, 2.16211, 2.1622, 2.16229, 2.16237, 2.16245, 2.16253, 2.1626,
    2.16267, 2.16274, 2.16281, 2.16287, 2.16293, 2.16299, 2.16305, 2.16311,
    2.16316, 2.16321, 2.16327, 2.16332, 2.16336, 2.16341, 2.16346, 2.1635,
    2.16354, 2.16359, 2.16363, 2.16367, 2.16371, 2.16374, 2.16378, 2.16382,
    2.16385, 2.16389, 2.16392, 2.16395, 2.16398, 2.16401, 2.16404, 2.16407,
    2.1641, 2.16413, 2.16416, 2.16419, 2.16421, 2.16424, 2.16427, 2.16429,
    2.16431, 2.16434,
];

/// Anticommutators, maximum of u_max.
pub const ANTICOMM_UMAX: [f64; 98] = [
    2.36603, 2.36603, 2.44491, 2.44949, 2.46664, 2.47073, 2.47603, 2.47876,
    2.48127, 2.48308, 2.48463, 2.48589, 2.48697, 2.48789, 2.48869, 2.48939,
    2.49001, 2.49056, 2.49105, 2.49149, 2.49189, 2.49226, 2.49259, 2.4929,
    2.49318, 2.49344, 2.49368, 2.49391, 2.49412, 2.49431, 2.4945, 2.49467,
    2.49483, 2.49498, 2.49512, 2.49526, 2.49538, 2.49551, 2.49562, 2.49573,
    2.49583, 2.49593, 2.49603, 2.49612, 2.4962, 2.49628, 2.49636, 2.49644,
    2.49651, 2.49658, 2.49665, 2.49671, 2.49677, 2.49683, 2.49689, 2.49695,
    2.497, 2.49705, 2.4971, 2.49715, 2.4972, 2.49724, 2.49728, 2.49733,
    2.49737, 2.49741, 2.49745, 2.49748, 2.49752, 2.49755, 2.49759, 2.49762,
    2.49766, 2.49769, 2.49772, 2.49775, 2.49778, 2.49781, 2.49783, 2.49786,
    2.49789, 2.49791, 2.49794, 2.49796, 2.49799, 2.49801, 2.49803, 2.49805,
    2.49808, 2.4981, 2.49812, 2.49814, 2.49816, 2.49818, 2.4982, 2.49822,
    2.49823, 2.49825,
];

/// Cubes, maximum of u_max.
pub const POW3_UMAX: [f64; 99] = [
    2.36603, 2.25971, 2.16889, 2.10727, 2.09897, 2.09021, 2.07744, 2.06386,
    2.05085, 2.03903, 2.02867, 2.02463, 2.02258, 2.01986, 2.01686, 2.01389,
    2.01113, 2.00871, 2.00759, 2.00704, 2.00634, 2.00558, 2.00484, 2.00416,
    2.00357, 2.00321, 2.00301, 2.00278, 2.00255, 2.00233, 2.00212, 2.00194,
    2.0018, 2.0017, 2.0016, 2.0015, 2.00141, 2.00133, 2.00125, 2.00118,
    2.00113, 2.00107, 2.00102, 2.00097, 2.00093, 2.00089, 2.00085, 2.00081,
    2.00078, 2.00075, 2.00072, 2.00069, 2.00066, 2.00064, 2.00062, 2.00059,
    2.00057, 2.00055, 2.00053, 2.00052, 2.0005, 2.00048, 2.00047, 2.00045,
    2.00044, 2.00043, 2.00041, 2.0004, 2.00039, 2.00038, 2.00037, 2.00036,
    2.00035, 2.00034, 2.00033, 2.00032, 2.00031, 2.0003, 2.0003, 2.00029,
    2.00028, 2.00027, 2.00027, 2.00026, 2.00026, 2.00025, 2.00024, 2.00024,
    2.00023, 2.00023, 2.00022, 2.00022, 2.00021, 2.00021, 2.0002, 2.0002,
    2.0002, 2.00019, 2.00019,
];

/// Fourth powers, minimum of h.
pub const POW4_H: [f64; 99] = [
    0.0, 1.12467, 0.467583, 0.644239, 0.510273, 0.416216, 0.336635, 0.29168,
    0.250652, 0.216753, 0.190117, 0.168017, 0.149996, 0.134442, 0.121554, 0.110269,
    0.100723, 0.0922493, 0.0849666, 0.0784334, 0.0727424, 0.0675917, 0.0630542, 0.0589167,
    0.0552367, 0.0518593, 0.0488306, 0.0460353, 0.0435107, 0.0411692, 0.0390411, 0.0370587,
    0.035247, 0.0335529, 0.031997, 0.0305369, 0.0291901, 0.0279223, 0.0267482, 0.0256398,
    0.0246096, 0.0236345, 0.0227253, 0.0218627, 0.021056, 0.020289, 0.0195696, 0.0188843,
    0.01824, 0.017625, 0.0170455, 0.0164914, 0.0159681, 0.015467, 0.0149928, 0.0145381,
    0.0141069, 0.0136929, 0.0132996, 0.0129215, 0.0125618, 0.0122155, 0.0118855, 0.0115675,
    0.011264, 0.0109712, 0.0106915, 0.0104213, 0.0101628, 0.00991295, 0.00967359, 0.00944199,
    0.00921989, 0.0090048, 0.00879831, 0.00859819, 0.00840586, 0.00821931, 0.00803986, 0.00786568,
    0.00769796, 0.00753505, 0.00737805, 0.00722545, 0.00707826, 0.0069351, 0.00679691, 0.00666242,
    0.00653249, 0.00640597, 0.00628366, 0.00616448, 0.00604919, 0.00593679, 0.00582798, 0.00572185,
    0.00561904, 0.00551871, 0.00542146,
];

/// Fourth powers, minimum of u_1/2.
pub const POW4_U_HALF: [f64; 99] = [
    3.0, 3.73205, 3.43649, 3.53517, 3.46883, 3.41326, 3.37114, 3.33513,
    3.30647, 3.28143, 3.26077, 3.2424, 3.22684, 3.21281, 3.20069, 3.18963,
    3.17992, 3.17098, 3.16303, 3.15566, 3.14904, 3.14286, 3.13725, 3.13199,
    3.12719, 3.12266, 3.1185, 3.11456, 3.11092, 3.10746, 3.10425, 3.10119,
    3.09834, 3.09561, 3.09306, 3.09061, 3.08832, 3.08611, 3.08403, 3.08204,
    3.08015, 3.07833, 3.0766, 3.07494, 3.07336, 3.07184, 3.07038, 3.06898,
    3.06763, 3.06634, 3.06509, 3.06389, 3.06274, 3.06162, 3.06054, 3.0595,
    3.0585, 3.05753, 3.05659, 3.05568, 3.0548, 3.05394, 3.05312, 3.05231,
    3.05154, 3.05078, 3.05005, 3.04934, 3.04864, 3.04797, 3.04732, 3.04668,
    3.04606, 3.04545, 3.04487, 3.04429, 3.04373, 3.04319, 3.04266, 3.04214,
    3.04163, 3.04114, 3.04065, 3.04018, 3.03972, 3.03927, 3.03883, 3.0384,
    3.03798, 3.03757, 3.03716, 3.03677, 3.03638, 3.03601, 3.03564, 3.03527,
    3.03492, 3.03457, 3.03423,
];

/// Fourth powers, maximum of u_2.
pub const POW4_U2: [f64; 99] = [
    3.0, 2.25, 2.76563, 2.65958, 2.74466, 2.80312, 2.85131, 2.87386,
    2.89556, 2.91262, 2.9257, 2.93601, 2.94425, 2.95117, 2.95675, 2.96153,
    2.96548, 2.96892, 2.97182, 2.97438, 2.97656, 2.97851, 2.98021, 2.98173,
    2.98306, 2.98427, 2.98534, 2.98632, 2.98719, 2.98799, 2.98871, 2.98938,
    2.98998, 2.99053, 2.99104, 2.99151, 2.99194, 2.99235, 2.99272, 2.99306,
    2.99338, 2.99369, 2.99396, 2.99423, 2.99447, 2.9947, 2.99492, 2.99512,
    2.99531, 2.99549, 2.99566, 2.99582, 2.99597, 2.99612, 2.99625, 2.99638,
    2.9965, 2.99662, 2.99673, 2.99684, 2.99694, 2.99703, 2.99712, 2.99721,
    2.99729, 2.99737, 2.99745, 2.99752, 2.99759, 2.99766, 2.99772, 2.99778,
    2.99784, 2.9979, 2.99795, 2.99801, 2.99806, 2.9981, 2.99815, 2.9982,
    2.99824, 2.99828, 2.99832, 2.99836, 2.9984, 2.99844, 2.99847, 2.9985,
    2.99854, 2.99857, 2.9986, 2.99863, 2.99866, 2.99869, 2.99871, 2.99874,
    2.99876, 2.99879, 2.99881,
];

/// Fourth powers, maximum of u_max.
pub const POW4_UMAX: [f64; 99] = [
    3.0, 2.5, 2.875, 2.81354, 2.86259, 2.89639, 2.92288, 2.93487,
    2.94638, 2.95534, 2.96215, 2.96749, 2.97174, 2.97528, 2.97814, 2.98058,
    2.98259, 2.98434, 2.98581, 2.98711, 2.98821, 2.9892, 2.99005, 2.99082,
    2.99149, 2.9921, 2.99264, 2.99314, 2.99357, 2.99398, 2.99434, 2.99467,
    2.99498, 2.99526, 2.99551, 2.99575, 2.99596, 2.99617, 2.99635, 2.99653,
    2.99669, 2.99684, 2.99698, 2.99711, 2.99723, 2.99735, 2.99745, 2.99756,
    2.99765, 2.99774, 2.99783, 2.99791, 2.99798, 2.99806, 2.99812, 2.99819,
    2.99825, 2.99831, 2.99836, 2.99842, 2.99847, 2.99851, 2.99856, 2.9986,
    2.99865, 2.99869, 2.99872, 2.99876, 2.99879, 2.99883, 2.99886, 2.99889,
    2.99892, 2.99895, 2.99898, 2.999, 2.99903, 2.99905, 2.99908, 2.9991,
    2.99912, 2.99914, 2.99916, 2.99918, 2.9992, 2.99922, 2.99923, 2.99925,
    2.99927, 2.99928, 2.9993, 2.99931, 2.99933, 2.99934, 2.99936, 2.99937,
    2.99938, 2.99939, 2.99941,
];

/// Value at `twice` from a list starting at `first`.
pub fn at(list: &[f64], first: u32, twice: u32) -> f64 {
    list[(twice - first) as usize]
}
