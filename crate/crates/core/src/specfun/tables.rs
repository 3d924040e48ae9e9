// Generated by scripts/gen_reference.py (mpmath, 40 digits). Do not edit.

/// First twenty zeros of J_0.
pub(crate) const BESSEL_J0_ZEROS: [f64; 20] = [
    2.404825557695773,
    5.520078110286311,
    8.653727912911013,
    11.791534439014281,
    14.930917708487787,
    18.071063967910924,
    21.21163662987926,
    24.352471530749302,
    27.493479132040253,
    30.634606468431976,
    33.77582021357357,
    36.917098353664045,
    40.05842576462824,
    43.19979171317673,
    46.341188371661815,
    49.482609897397815,
    52.624051841115,
    55.76551075501998,
    58.90698392608094,
    62.048469190227166,
];

/// First ten zeros of Ai.
pub(crate) const AIRY_ZEROS: [f64; 10] = [
    -2.338107410459767,
    -4.08794944413097,
    -5.520559828095551,
    -6.786708090071759,
    -7.944133587120853,
    -9.02265085334098,
    -10.040174341558085,
    -11.008524303733262,
    -11.936015563236262,
    -12.828776752865757,
];

/// Ai'(a_m) for the first ten zeros.
pub(crate) const AIRY_PRIME_AT_ZEROS: [f64; 10] = [
    0.7012108227206914,
    -0.803111369654864,
    0.8652040258941519,
    -0.9108507370496018,
    0.9473357094415678,
    -0.9779228085694986,
    1.004370122660312,
    -1.0277386888207862,
    1.0487206485881895,
    -1.0677938591574279,
];

/// Chebyshev coefficients for j_{alpha,s}, s = 1..6, in the variable (alpha - 2)/3.
/// The first row approximates j_{alpha,1} / sqrt(alpha + 1).
pub(crate) const BESSEL_ZERO_CHEBYSHEV: [&[f64]; 6] = [
    &[
        5.76795063245554,
        0.7676652115388245,
        -0.08653880475892199,
        0.020433979037999546,
        -0.006103761346509409,
        0.00204684132223978,
        -0.0007344765786556316,
        0.00027533675082246767,
        -0.00010637570365326811,
        4.200333640365286e-05,
        -1.6858622934291312e-05,
        6.852440289355878e-06,
        -2.8133003794270948e-06,
        1.1644191107885638e-06,
        -4.851894228161232e-07,
        2.0330881833605216e-07,
        -8.560193053899209e-08,
        3.6191759904468594e-08,
        -1.535705350505517e-08,
        6.537237080027851e-09,
        -2.790728101300353e-09,
        1.194405807802234e-09,
        -5.123790656840573e-10,
        2.2026510487246937e-10,
        -9.487183339452369e-11,
        4.0935382422232657e-11,
        -1.769177895479596e-11,
        7.657788571616002e-12,
        -3.319314672750203e-12,
        1.4406735538285313e-12,
        -6.260629092432247e-13,
        2.723781992542933e-13,
        -1.1863110247206788e-13,
        5.172127719981612e-14,
        -2.257144457799676e-14,
        9.85929817761008e-15,
        -4.310306337974086e-15,
        1.885933517412344e-15,
    ],
    &[
        16.52638866461436,
        4.20920033077938,
        -0.16464472248253745,
        0.03976461882584493,
        -0.011799527177271694,
        0.0038935552289059575,
        -0.0013699896885126129,
        0.0005030547000654605,
        -0.00019038177007250229,
        7.368122226262031e-05,
        -2.9010830443093837e-05,
        1.1579130600292322e-05,
        -4.672877257428816e-06,
        1.9030819383555859e-06,
        -7.810300829060117e-07,
        3.2264812901611177e-07,
        -1.3404724990350102e-07,
        5.5968776264729247e-08,
        -2.347153218394658e-08,
        9.881817523228785e-09,
        -4.1750124483876885e-09,
        1.7695249211913195e-09,
        -7.521547949792028e-10,
        3.205533258870099e-10,
        -1.369433105548463e-10,
        5.863345089689119e-11,
        -2.5155940251216402e-11,
        1.0813361297973226e-11,
        -4.656370502880279e-12,
        2.008392552102849e-12,
        -8.675943629574088e-13,
        3.7532646431749716e-13,
        -1.625875342658808e-13,
        7.052053607341941e-14,
        -3.062400896276722e-14,
        1.3313647417146558e-14,
        -5.7942007990740225e-15,
        2.52421642897506e-15,
        -1.100710751018103e-15,
    ],
    &[
        22.987742904346405,
        4.317988625384015,
        -0.13066766439749433,
        0.023009510531449225,
        -0.004987164201034621,
        0.0012044530262293677,
        -0.00031078605098192535,
        8.383477038202437e-05,
        -2.334332472887395e-05,
        6.655551028342969e-06,
        -1.9326025708000583e-06,
        5.693670206869222e-07,
        -1.697217930394292e-07,
        5.108406236686136e-08,
        -1.5500769516773954e-08,
        4.735974048926361e-09,
        -1.4555672053138803e-09,
        4.496591066108357e-10,
        -1.395361940033244e-10,
        4.347258293663529e-11,
        -1.3591891131256486e-11,
        4.263056778695927e-12,
        -1.3409240758609024e-12,
        4.2287662636076975e-13,
        -1.3367497489041154e-13,
        4.2347435455126394e-14,
        -1.3442164753135011e-14,
        4.274743224886032e-15,
        -1.3617295381470204e-15,
    ],
    &[
        29.378073011860632,
        4.3874374553055695,
        -0.10946959576286323,
        0.01535957475374785,
        -0.0026550249384328854,
        0.0005118527107359962,
        -0.00010552247307986558,
        2.2761625577935046e-05,
        -5.071978671850147e-06,
        1.158094349293661e-06,
        -2.694798095514533e-07,
        6.365724237471699e-08,
        -1.522243016741004e-08,
        3.6771768607525813e-09,
        -8.958428530287919e-10,
        2.1982712152935523e-10,
        -5.4277627959862495e-11,
        1.3473902431200857e-11,
        -3.3605211512772228e-12,
        8.41625386592268e-13,
        -2.115573279790104e-13,
        5.335366394105341e-14,
        -1.3495309945023078e-14,
        3.4226326833016386e-15,
    ],
    &[
        35.73376574275567,
        4.435717974422405,
        -0.09449231723067127,
        0.011070071950668552,
        -0.0015986682253465773,
        0.0002576201489326325,
        -4.4416218916404836e-05,
        8.016196882698478e-06,
        -1.4952238836848749e-06,
        2.859033678862805e-07,
        -5.573371644152418e-08,
        1.1033491530442387e-08,
        -2.21190575562654e-09,
        4.480704298463113e-10,
        -9.156561713729496e-11,
        1.88520685214854e-11,
        -3.906369514408477e-12,
        8.139694736374943e-13,
        -1.7043617883884424e-13,
        3.5841315689781583e-14,
        -7.565971724884798e-15,
        1.6026057160653476e-15,
    ],
    &[
        42.06956861617472,
        4.47131943816135,
        -0.08323424039352337,
        0.00838807301983628,
        -0.0010424434346401829,
        0.000144611721355875,
        -2.1469972669596217e-05,
        3.337753235812442e-06,
        -5.364277996208845e-07,
        8.840164437015119e-08,
        -1.485612085491975e-08,
        2.5360075736588688e-09,
        -4.384819232964277e-10,
        7.662487919301109e-11,
        -1.3510738542283874e-11,
        2.4005316939600716e-12,
        -4.293349973928722e-13,
        7.722763800276025e-14,
        -1.3961427812776913e-14,
        2.535198855821258e-15,
    ],
];
