// 15-point Kronrod / 7-point Gauss rule on [-1, 1], stored as (hi, lo) pairs.
// Ordering follows QUADPACK: descending abscissae, Gauss nodes at odd indices,
// the centre last.

pub(crate) const XGK: [(f64, f64); 8] = [
    (0.9914553711208126, 2.7322067495382985e-17),
    (0.9491079123427585, 3.82579658786657e-17),
    (0.8648644233597691, -2.3887783447584197e-17),
    (0.7415311855993945, -2.0220134774069897e-17),
    (0.5860872354676911, -1.7466970805984817e-17),
    (0.4058451513773972, -1.72492754475471e-17),
    (0.20778495500789848, -1.322698778629045e-17),
    (0.0, 0.0),
];

pub(crate) const WGK: [(f64, f64); 8] = [
    (0.022935322010529224, 5.957180517223158e-19),
    (0.06309209262997856, -4.536585404360517e-18),
    (0.10479001032225019, -3.90658597958814e-18),
    (0.14065325971552592, -2.484164787968961e-19),
    (0.1690047266392679, -7.56643290985809e-18),
    (0.19035057806478542, -9.616513280901216e-18),
    (0.20443294007529889, 6.740401802865974e-18),
    (0.20948214108472782, 9.321252782204223e-18),
];

pub(crate) const WG: [(f64, f64); 4] = [
    (0.1294849661688697, -9.625448970284404e-18),
    (0.27970539148927664, 2.3267180221717138e-17),
    (0.3818300505051189, 2.1862747923824822e-17),
    (0.4179591836734694, -1.5497807119257288e-17),
];
