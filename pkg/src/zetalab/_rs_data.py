"""Embedded numerical tables (generated by tools/gen_constants.py).

Do not edit by hand; rerun the generator instead.
"""

import numpy as np

# Chebyshev coefficients (on 2*p-1 over p in [0,1]) of the
# Riemann-Siegel correction terms C_0..C_5.
RS_CHEB = [
    np.array([
        np.float64(0.6426672862397684),
        np.float64(-2.9586764459208707e-16),
        np.float64(0.27197299999785496),
        np.float64(-1.0759405692294949e-16),
        np.float64(0.010738605819339836),
        np.float64(-3.826943379543209e-16),
        np.float64(-0.0013743815296338457),
        np.float64(-3.892618410906794e-16),
        np.float64(-0.0001246822188035781),
        np.float64(-9.806216123789531e-17),
        np.float64(-5.764599709195536e-07),
        np.float64(-3.6970356814750183e-16),
        np.float64(2.728067424903828e-07),
        np.float64(-2.527088145893648e-16),
        np.float64(8.07795312556435e-09),
        np.float64(-5.955385323258725e-17),
        np.float64(-2.0884611457539578e-10),
        np.float64(5.3079824809135614e-17),
        np.float64(-1.3115308760570727e-11),
        np.float64(-1.3429312730245236e-16),
        np.float64(-1.3720763135746863e-14),
        np.float64(-2.552323861751932e-16),
        np.float64(1.036607720908244e-14),
        np.float64(1.9640818737442316e-16),
        np.float64(3.378602906432658e-17),
        np.float64(-6.0169512154151584e-18),
        np.float64(-2.832157623756196e-16),
        np.float64(-6.300569485167772e-17),
        np.float64(-3.895128054190692e-16),
        np.float64(7.575454783337895e-18),
        np.float64(-2.3359928001950683e-16),
        np.float64(-5.763673368462845e-17),
        np.float64(-3.867635341829719e-16),
        np.float64(-1.467705047923306e-17),
        np.float64(-3.891121710815708e-17),
        np.float64(1.3157537085795403e-16),
        np.float64(-2.5071389773225946e-16),
    ]),
    np.array([
        np.float64(6.582812753583435e-18),
        np.float64(0.010697913921002711),
        np.float64(-2.5422966415343956e-17),
        np.float64(0.017170651243377952),
        np.float64(1.3285890024891323e-18),
        np.float64(0.0027932111497884107),
        np.float64(-2.5925905653991804e-17),
        np.float64(-3.637565371929187e-05),
        np.float64(-1.2899829064180308e-17),
        np.float64(-2.710895523117463e-05),
        np.float64(-1.6846489133720426e-17),
        np.float64(-1.0483749866876397e-06),
        np.float64(4.593299490057476e-18),
        np.float64(5.886467165579399e-08),
        np.float64(-1.2729522841521121e-17),
        np.float64(4.322967265027868e-09),
        np.float64(-8.895238554703683e-18),
        np.float64(-1.1369579203581328e-11),
        np.float64(7.622659984796613e-18),
        np.float64(-6.699829810387619e-12),
        np.float64(2.7559345029933927e-17),
        np.float64(-1.0080895596255839e-13),
        np.float64(-1.1033243034926234e-17),
        np.float64(5.171429241315386e-15),
        np.float64(1.1963167635345566e-17),
        np.float64(1.4971019875815646e-16),
        np.float64(9.759289537730921e-18),
        np.float64(-3.0126223202960367e-17),
        np.float64(-1.4282090939190955e-17),
        np.float64(-2.424930754378787e-17),
        np.float64(5.325919222602167e-19),
        np.float64(-2.562866444205724e-17),
        np.float64(-1.2680199988573279e-17),
        np.float64(-2.2380207213190503e-17),
        np.float64(-3.477264930484253e-19),
        np.float64(-2.3685841203763996e-17),
        np.float64(3.46984526132553e-17),
    ]),
    np.array([
        np.float64(0.003146115853987957),
        np.float64(8.228529609986798e-14),
        np.float64(-0.002308783884532643),
        np.float64(-2.4845174100210333e-14),
        np.float64(5.769820766719332e-05),
        np.float64(8.81818195587264e-15),
        np.float64(0.0003523886202365107),
        np.float64(-1.776963260054728e-15),
        np.float64(2.5246667458740687e-05),
        np.float64(6.637655475579742e-17),
        np.float64(-3.4428211972028775e-06),
        np.float64(7.809699457309618e-17),
        np.float64(-3.5350745565884046e-07),
        np.float64(-1.792321174059873e-17),
        np.float64(3.7308301831279e-09),
        np.float64(6.544168238322017e-19),
        np.float64(1.2776951864771795e-09),
        np.float64(7.296983138891067e-20),
        np.float64(2.1874613703810196e-11),
        np.float64(1.6038627506933289e-18),
        np.float64(-1.9141452711738425e-12),
        np.float64(1.2307463457036136e-18),
        np.float64(-6.563004197769605e-14),
        np.float64(-1.7588483879943124e-18),
        np.float64(1.259061330361374e-15),
        np.float64(-4.82490515193083e-19),
        np.float64(8.396739019417111e-17),
        np.float64(6.855471920679895e-19),
        np.float64(2.5815107154812874e-18),
        np.float64(-1.0790682160160319e-19),
        np.float64(1.3343238135958344e-18),
        np.float64(6.360788267317209e-19),
        np.float64(3.2669893182050867e-18),
        np.float64(3.8333451434943304e-20),
        np.float64(1.5119266146876891e-19),
        np.float64(-1.3444974217665838e-18),
        np.float64(1.818250299164609e-18),
    ]),
    np.array([
        np.float64(1.0077100476586561e-13),
        np.float64(7.12325501225654e-05),
        np.float64(2.4405091337253406e-13),
        np.float64(0.00023234305663358861),
        np.float64(-3.47475932658867e-14),
        np.float64(-0.00012929912175027412),
        np.float64(1.8256253278718078e-14),
        np.float64(1.8074496675249187e-05),
        np.float64(-6.9501562952986525e-15),
        np.float64(6.526185177498708e-06),
        np.float64(1.556093656552172e-15),
        np.float64(-1.1696366491101469e-07),
        np.float64(-1.2840471223114818e-16),
        np.float64(-7.349475837363283e-08),
        np.float64(-2.6537108256578858e-17),
        np.float64(-1.7750911163441063e-09),
        np.float64(6.222810982656122e-18),
        np.float64(2.555552478283732e-10),
        np.float64(-1.9957751160601558e-20),
        np.float64(1.1376639327951237e-11),
        np.float64(3.0843745421150877e-19),
        np.float64(-3.349861279453895e-13),
        np.float64(-2.216171963969236e-19),
        np.float64(-2.553706999019663e-14),
        np.float64(2.5152572942657805e-19),
        np.float64(6.757612269045754e-17),
        np.float64(1.8488001067527694e-19),
        np.float64(2.946586318108871e-17),
        np.float64(-2.4787396131336674e-19),
        np.float64(1.756530485255835e-19),
        np.float64(-2.128102518639158e-20),
        np.float64(-2.7472350803968006e-19),
        np.float64(-2.20717961638388e-19),
        np.float64(-1.5993827574907832e-19),
        np.float64(5.727583401554119e-21),
        np.float64(-2.9261148857655377e-19),
        np.float64(2.2420175455913907e-19),
    ]),
    np.array([
        np.float64(0.00016765744743919527),
        np.float64(1.0113364675704017e-09),
        np.float64(-0.00022728770662249864),
        np.float64(-3.056276686038005e-10),
        np.float64(6.477387405439298e-05),
        np.float64(1.0840187111848099e-10),
        np.float64(-8.492201689176945e-06),
        np.float64(-2.1888738329820465e-11),
        np.float64(-2.6161402377861723e-06),
        np.float64(8.147705885378243e-13),
        np.float64(8.336763793417341e-07),
        np.float64(9.304974324923843e-13),
        np.float64(6.324705247321207e-08),
        np.float64(-2.4188933476394696e-13),
        np.float64(-1.0059947992820374e-08),
        np.float64(9.064461310447052e-15),
        np.float64(-7.822681801094603e-10),
        np.float64(4.0604609410000756e-15),
        np.float64(3.1676592649685927e-11),
        np.float64(-2.2460830952818015e-16),
        np.float64(3.5006984364736584e-12),
        np.float64(-3.3432594134928657e-17),
        np.float64(-1.4314901059722307e-14),
        np.float64(8.528034432622291e-19),
        np.float64(-7.269393933303704e-15),
        np.float64(9.80162871847487e-20),
        np.float64(-8.760487439809937e-17),
        np.float64(7.152776338430491e-20),
        np.float64(8.44389726356604e-18),
        np.float64(-3.398870794063479e-20),
        np.float64(2.8550490421810265e-19),
        np.float64(-2.7395416770688156e-21),
        np.float64(2.417985486799518e-19),
        np.float64(8.611028587926823e-20),
        np.float64(1.4651294217106135e-20),
        np.float64(-1.500696986283671e-19),
        np.float64(2.3323398469920805e-19),
    ]),
    np.array([
        np.float64(8.291717547795067e-11),
        np.float64(8.82401249776811e-05),
        np.float64(6.412234038453833e-10),
        np.float64(-1.561407470549229e-05),
        np.float64(-6.691534326215135e-11),
        np.float64(-1.886055120675243e-07),
        np.float64(3.9465096923680963e-11),
        np.float64(2.1107729973201848e-06),
        np.float64(-1.801792866365434e-11),
        np.float64(-6.657406014374711e-07),
        np.float64(4.7851838176119336e-12),
        np.float64(2.7670282966351834e-08),
        np.float64(-6.053402152753417e-13),
        np.float64(1.8122808006635244e-08),
        np.float64(-2.98862237053476e-14),
        np.float64(-5.770223112166911e-10),
        np.float64(1.7896466111139287e-14),
        np.float64(-1.8694434877992725e-10),
        np.float64(-9.271332381676613e-16),
        np.float64(-9.97800045898199e-14),
        np.float64(-1.521067235205574e-16),
        np.float64(7.886771513635961e-13),
        np.float64(1.09006640781266e-17),
        np.float64(1.441000539234332e-14),
        np.float64(7.121195778872486e-19),
        np.float64(-1.58848770415122e-15),
        np.float64(4.623204227372221e-20),
        np.float64(-4.9007958167673996e-17),
        np.float64(-1.749791539166308e-20),
        np.float64(1.5386536066567617e-18),
        np.float64(-7.428838033737031e-20),
        np.float64(-5.459464457568317e-20),
        np.float64(-4.2731337947082896e-20),
        np.float64(-7.784801996057094e-20),
        np.float64(-3.0084561761497496e-21),
        np.float64(-5.0651211044726313e-20),
        np.float64(1.369003272403392e-19),
    ]),
]

# 20-node Gauss-Legendre table of |zeta(1/2+it)|^2 on [0, 10].
HEAD_T = np.array([0.03435700407452558, 0.18014036361043095, 0.4388278587433708, 0.8044151408889061, 1.268340467699246, 1.8197315963674248, 2.4456649902458643, 3.1314695564229025, 3.8610707442917747, 4.617367394332513, 5.382632605667487, 6.138929255708225, 6.8685304435770975, 7.554335009754135, 8.180268403632574, 8.731659532300753, 9.195584859111094, 9.561172141256629, 9.81985963638957, 9.965642995925474], dtype=float)
HEAD_V = np.array([2.123247389537557, 1.903157927956592, 1.2641953425408223, 0.6960972477461304, 0.41717322949005153, 0.30635106491540387, 0.2769912560445389, 0.29698741575232146, 0.3598237931719655, 0.470233412117479, 0.6365048852650962, 0.863267754174744, 1.1437489837811057, 1.454755112657942, 1.7593485780676235, 2.0186571185260815, 2.2070490929917024, 2.3210182507574815, 2.376356367148404, 2.3965137983425966], dtype=float)
HEAD_W = np.array([np.float64(0.017614007139153273), np.float64(0.04060142980038622), np.float64(0.06267204833410944), np.float64(0.08327674157670467), np.float64(0.10193011981724026), np.float64(0.11819453196151825), np.float64(0.13168863844917653), np.float64(0.14209610931838187), np.float64(0.14917298647260366), np.float64(0.15275338713072578), np.float64(0.15275338713072578), np.float64(0.14917298647260366), np.float64(0.14209610931838187), np.float64(0.13168863844917653), np.float64(0.11819453196151825), np.float64(0.10193011981724026), np.float64(0.08327674157670467), np.float64(0.06267204833410944), np.float64(0.04060142980038622), np.float64(0.017614007139153273)], dtype=float)

# int_0^10 |zeta(1/2+it)|^2 dt
J_HEAD = 9.982734637918993
