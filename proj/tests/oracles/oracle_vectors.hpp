// Generated by gen_vectors.py. Do not edit by hand.
#pragma once

namespace oracle {

struct ShiftVec { double v_r, t_em, shift; };
inline constexpr ShiftVec kShift[] = {
    {1742.9203291638496, 1e-06, 5.8137564260000485e-12},
    {7183.2581843962325, 5e-07, 1.1980385084264249e-11},
    {-2959.161822499327, 1e-06, -9.870701358669027e-12},
    {7622.585233028965, 1e-06, 2.5426207463261017e-11},
    {4649.901246785046, 5e-07, 7.755200510723065e-12},
    {159.95508581439935, 5.837871827946452e-06, 3.1148124787470106e-12},
    {5266.516755555189, 2e-06, 3.513441792825348e-11},
    {4405.067568536642, 1e-06, 1.4693723777856486e-11},
    {5047.73946529529, 2e-06, 3.367489295074454e-11},
    {-2845.9297511449613, 1e-06, -9.49299982438171e-12},
    {6640.283439181441, 1e-06, 2.2149601372498308e-11},
    {-6200.228850170671, 2.2107024949666766e-06, -4.572116817040364e-11},
    {7591.431713167754, 3.2204706146195426e-06, 8.154969247140848e-11},
    {-3702.3479595706913, 1.0543508144126047e-06, -1.3020919913909921e-11},
    {-4824.48811632878, 3.864170863133316e-06, -6.21851748140062e-11},
    {-529.3951253978867, 5e-07, -8.829360300282915e-13},
    {-4153.8758149302885, 1e-06, -1.385583827772708e-11},
    {383.19623802413116, 2e-06, 2.5564101283971004e-12},
    {4442.047897543829, 2e-06, 2.963415375542122e-11},
    {-1532.603056443003, 7.3776298512222185e-06, -3.7716019057718624e-11},
    {5716.004537436609, 2e-06, 3.813307763357148e-11},
    {-6470.653672946763, 1e-06, -2.1583777377570863e-11},
    {-4016.148091317355, 1.6010087289839905e-06, -2.1447798233441474e-11},
    {4886.7694309736125, 1e-06, 1.6300508236847013e-11},
};

struct BoundVec { double v_r, t_em, w_i, bound; long long floor_bound; };
inline constexpr BoundVec kBound[] = {
    {7854.19363132257, 1.9405978462614347e-06, 2.817246885385164e-09, 55.412591504444826, 55},
    {1000.3680935277388, 3.4517890726521e-06, 1.5e-09, 130.22905251467685, 130},
    {4183.558382943089, 9.98822637524846e-07, 1.5e-09, 107.61622438603762, 107},
    {-4291.77136029811, 1e-06, 4.711924944512401e-09, 329.14138299500786, 329},
    {3023.2163459251315, 1e-06, 1.5e-09, 148.7451229238413, 148},
    {929.9889985796974, 1e-06, 1.5e-09, 483.5419426324138, 483},
    {4567.9491992232415, 1.1680106695434675e-06, 2.6117840192928826e-09, 146.75397983662555, 146},
    {-4807.441040226171, 3.2699963720946763e-06, 1.5e-09, 28.605577804784087, 28},
    {-4865.1413816025215, 1e-06, 4.20440507232502e-09, 259.0775544214109, 259},
    {-114.80298668324383, 3.0172581079796568e-06, 1.5059349173446853e-09, 1303.350600592539, 1303},
    {6098.2361114507, 2.5534807370073413e-06, 1.535220654822269e-09, 29.556614440440264, 29},
    {-7298.010040545366, 1e-06, 1.5e-09, 61.617986889806424, 61},
    {2889.6292526906427, 1.131414066449997e-06, 2.3430006286895664e-09, 214.84705699443253, 214},
    {477.27167813658355, 2.4872736985630694e-06, 3.821554490726011e-09, 965.0982282546618, 965},
    {-4723.0809293639595, 2.2457488440546125e-06, 6.881502648205802e-10, 19.44990176725161, 19},
    {6745.763304355708, 1e-06, 2.2625913083018213e-09, 100.55315894752172, 100},
    {-3775.40336876245, 1.4417921660426245e-06, 2.257167274044314e-09, 124.3135381800624, 124},
    {3621.489136218955, 1e-06, 1.8292434123032537e-09, 151.427591862737, 151},
    {-1656.8923802051845, 1e-06, 1.5e-09, 271.4048856596902, 271},
    {3640.744850250975, 1e-06, 1.5e-09, 123.515573185251, 123},
    {-7773.301715586896, 7.309654825446428e-07, 2.410135175377336e-09, 127.16269103184095, 127},
    {-6470.880706594759, 1e-06, 1.5e-09, 69.49420139080952, 69},
    {-3887.8977390441937, 8.110018309226872e-07, 2.2751233412009102e-09, 216.3161679822474, 216},
    {4335.1223987403255, 1e-06, 1.5e-09, 103.73148567400725, 103},
};

struct SingleVec { double eta, t_rt; int n; double p_bsm, rate; };
inline constexpr SingleVec kSingle[] = {
    {0.23167362260372545, 0.002688402094670553, 26, 0.46671483096019195, 1045.7004967635846},
    {0.80596259776343, 0.011654533164926912, 34, 0.9024311208528578, 2121.841731956632},
    {0.7071479242862161, 0.006898154272367898, 22, 0.5, 1127.6389103542392},
    {0.10656057953296334, 0.004947847356978416, 125, 0.8497306387671769, 2287.5551421932364},
    {0.4411154706642678, 0.00426129636703898, 49, 0.5, 2536.159914825211},
    {0.2768559491590371, 0.008610868714585681, 34, 0.5, 546.5826145660949},
    {0.8593101923475593, 0.0032931891104463025, 68, 0.5, 8871.809531720912},
    {0.8878785723410832, 0.0037204784991616375, 29, 0.47108385234496486, 3260.2506620182967},
    {0.795604120041569, 0.007565832726973926, 119, 0.24785036335033173, 3101.5358791032922},
    {0.4990208577690428, 0.00895132769548299, 117, 0.11151746845226759, 727.3777393480583},
    {0.018156247841391717, 0.0027653494150750428, 44, 0.5, 144.4437546782052},
    {0.06645842057477842, 0.008940923150692965, 58, 0.5993988190615845, 258.411317488587},
    {0.1494349182628909, 0.006882653403370882, 48, 0.5, 521.0836327386281},
    {0.7763232920011276, 0.0026160105363722125, 89, 0.41071612278285186, 10847.630557842185},
    {0.7095304068333493, 0.008743394457202062, 165, 0.6062175405973832, 8117.146464336797},
    {0.5918174188651955, 0.011361042735511698, 188, 0.6522981091088129, 6388.126666108801},
    {0.01714370216543058, 0.0033287921829742257, 142, 0.5, 365.65900988688895},
    {0.7826234705521881, 0.0027143115218385655, 2, 0.5, 288.332221359054},
    {0.058873531938797324, 0.0074058803748168565, 17, 0.5, 67.57130768428763},
    {0.899342237107539, 0.002908515042792465, 169, 0.5, 26128.253736870764},
    {0.31234252404718615, 0.00504231229210719, 136, 0.5, 4212.212652606791},
    {0.40663554938455176, 0.0052258241623476505, 185, 0.5166228414200785, 7436.967488292034},
    {0.5369761705037703, 0.010048474057929092, 95, 0.8320607932906169, 4224.093877738742},
    {0.924436311281119, 0.0055564032567854485, 156, 0.5, 12977.105682866304},
};

struct CorrectedVec { double eta, t_rt, v_r; int m_sat; double p_bsm, rate; };
inline constexpr CorrectedVec kCorrected[] = {
    {0.8948324863324388, 0.008973564041441659, -6446.029916351727, 150, 0.5, 3478.2951041838437},
    {0.1739338527444637, 0.004113507515475919, 0.0, 150, 0.5, 3171.2690220587847},
    {0.005941047715291529, 0.0036615630046604166, 0.0, 10, 0.5, 8.112720862279028},
    {0.425435257770924, 0.007512351627371049, 0.0, 10, 0.5, 283.1571782535193},
    {0.928659095748083, 0.008904480060864898, 0.0, 10, 0.08513465257905532, 88.78796846136514},
    {0.9060972199092032, 0.0099264745806771, -1429.2613787583678, 150, 0.08947772428505066, 1225.1406563258884},
    {0.09139453217303083, 0.0048250786954354835, 3221.7538885108606, 150, 0.918843671484215, 2429.277022054112},
    {0.884253158447217, 0.00933857399975462, 5662.559858000326, 100, 0.45018933341522166, 3385.247391382596},
    {0.7593923958604482, 0.010656052816373884, 1220.0248323058368, 100, 0.12792777142390155, 911.6638075349025},
    {0.9318253038209774, 0.00949294262885828, 2918.4170507149774, 150, 0.5, 7361.984636262215},
    {0.3899969551904265, 0.011327158936178161, 0.0, 100, 0.5, 1721.5126819877278},
    {0.6702592853432523, 0.00854893317569895, 0.0, 100, 0.8844314579695006, 6934.179794957418},
    {0.5183624512437266, 0.0034486349876916783, 0.0, 100, 0.5, 7515.47283336427},
    {0.8734871020672615, 0.00893813974575264, -3604.4954572772713, 150, 0.5, 6096.026410659875},
    {0.18290660287485108, 0.0032504227998602, 0.0, 100, 0.5, 2813.581711319491},
    {0.7594879146685083, 0.0040476858751464576, 0.0, 100, 0.5, 9381.754638272512},
    {0.1945945673174066, 0.0037102560837516934, -5722.343451513867, 10, 0.22132986277709282, 116.08252344128967},
    {0.6490331072673803, 0.004542021748979332, 6794.108133294945, 100, 0.5, 4728.976468223046},
    {0.6781546939669648, 0.0039650290487841895, 0.0, 50, 0.5, 4275.849468082142},
    {0.5707519798079077, 0.005575328671723031, 0.0, 150, 0.5, 7677.825112391794},
    {0.48984769714968973, 0.004487321715240137, 0.0, 100, 0.5, 5458.129907267812},
    {0.8112130064450153, 0.008390664821925086, 6923.15671346475, 100, 0.5, 3139.9037551386623},
    {0.9425820678838143, 0.009827426131922229, -4168.710265189457, 100, 0.5, 4795.671090429488},
    {0.36581404973897763, 0.011539513616799361, 0.0, 50, 0.6605782869450139, 1047.0494092801134},
};

struct DualVec { double eta_a, t_a, eta_b, t_b, m_a, m_b, p_a, p_b, rate; };
inline constexpr DualVec kDual[] = {
    {0.2365684428070387, 0.005831258900040893, 0.4964269889876268, 0.011534732724327574, 4.088711566951121, 61.66089316490548, 0.7056705615388552, 0.5, 117.05311146695477},
    {0.9406473668537236, 0.00611048159055949, 0.2288986536219598, 0.0059881859281334, 54.57200420047445, 49.13646531715642, 0.4723400867018537, 0.5, 939.1217047885784},
    {0.9381340484855172, 0.007639266588566009, 0.7325698286919335, 0.0021846458384541917, 30.446640035496294, 26.96209722046841, 0.5, 0.5, 1869.4876889119682},
    {0.43718798540189907, 0.006058427256885784, 0.5252698952823988, 0.006095576612732847, 8.42298324034821, 61.0952394361097, 0.8332530392083509, 0.5, 506.4670121310818},
    {0.6987462633727345, 0.007820246158929997, 0.07871698486334974, 0.005495006789601301, 53.881973004733666, 19.32109873400151, 0.5, 0.5, 138.38914989748665},
    {0.14618706238615561, 0.006646432720988089, 0.9869983543451515, 0.01024967567129284, 84.68926932510765, 8.063668996781313, 0.1000349339573414, 0.5, 186.3375589312441},
    {0.6123949946930725, 0.006712877099175418, 0.8658203345591564, 0.0038713953678436814, 35.644281404694084, 66.32445053529979, 0.25422779946766677, 0.5, 826.6769687202965},
    {0.2818224191530076, 0.0107936163063575, 0.7219796992962597, 0.004125530644980282, 67.17932924209951, 29.982424154107985, 0.5, 0.7615297680303067, 877.0295583387301},
    {0.5419090286298005, 0.0043661601314415426, 0.042853482857789386, 0.0055407698380571715, 15.07591018183007, 8.515080781534431, 0.5307507203665545, 0.5, 32.92871559091212},
    {0.8424780782295379, 0.011643371516080865, 0.5713076801947912, 0.004603608966135915, 64.4064864775463, 40.51729953527865, 0.5, 0.7970601920669932, 2330.1263245864407},
    {0.13830443093474412, 0.0050386860423775265, 0.2840603320292782, 0.004374111877368987, 58.39107055655395, 82.47512207356564, 0.5, 0.3385047402513366, 801.3739809420742},
    {0.27068103858698056, 0.006732224960497209, 0.6825988826822017, 0.004592008070048839, 27.953203225501372, 4.945256702790018, 0.987779034399761, 0.7357970214243319, 540.8910510040296},
    {0.7864304071945841, 0.004921262592138425, 0.8024938747529986, 0.011907052299374013, 92.33642490489137, 52.38543718992309, 0.5, 0.5, 1765.2980525407334},
    {0.4244894071648335, 0.0066787210045150475, 0.8126160038854359, 0.01080293878181683, 86.0492335955926, 0.9985112669181355, 0.5417611240543324, 0.46923162940202856, 35.24387925427328},
    {0.2675188128627942, 0.011802910964837494, 0.2938172665399561, 0.011229574993442288, 42.89970368807392, 19.877402470561393, 0.5, 0.5, 260.0420792071597},
    {0.17060460338033986, 0.007508554249680755, 0.3770533194830518, 0.003405366366414511, 8.165859211755352, 6.386527025667416, 0.1680009221963965, 0.5, 31.170801977223064},
    {0.11057864099348064, 0.009010069029335824, 0.9488982128767601, 0.003122117024380076, 98.72926968823644, 44.0170779446568, 0.5, 0.5232195743640728, 605.8415553120794},
    {0.9940121957890502, 0.010629561763593559, 0.1731924243653951, 0.007545941932732342, 39.967891040000524, 71.39452322622624, 0.5, 0.5, 819.3139222504154},
    {0.24123946201052646, 0.01047746220149056, 0.5872284344671383, 0.004571254029108683, 67.84888858061468, 12.859559438481929, 0.42472760054295433, 0.5, 663.5069413407132},
    {0.9048779642548725, 0.004145036975836928, 0.8665341475221962, 0.0033433529687804347, 30.392615475612626, 96.15978371660817, 0.5, 0.8394210383625238, 3317.414076191759},
    {0.7092401243508717, 0.0061693439272240405, 0.26557587654506803, 0.0034196753807515306, 23.675842552957082, 20.27085740225235, 0.5, 0.30095425312218527, 473.77958757634906},
    {0.06236415851028583, 0.006647214043615685, 0.018503800409703102, 0.004061701327826685, 34.0138359627087, 70.03953194266298, 0.5, 0.13359174834921655, 42.626121558391304},
    {0.1519785270959384, 0.004700019712540219, 0.9147608800550656, 0.011728932624715629, 90.25782574022008, 24.398302014743926, 0.5, 0.5, 951.4340706427903},
    {0.8767985417762054, 0.011590288843627785, 0.40113144365753506, 0.0069913019434376415, 59.13719983853149, 16.200723438973974, 0.5, 0.5, 464.76461994836313},
};

struct AllocVec { double eta_a, t_a, eta_b, t_b; int m_sat; double real_a, real_b; int int_a, int_b; };
inline constexpr AllocVec kAlloc[] = {
    {0.016457700070292385, 0.010227751751558158, 0.3015915618333688, 0.011082475135261052, 106, 100.08216006205342, 5.917839937946581, 100, 6},
    {0.23777282829533714, 0.008583210161141146, 0.5985312874888022, 0.008617850282502674, 74, 52.90007705715189, 21.09992294284811, 53, 21},
    {0.5468485824381021, 0.011837433979947682, 0.9587539653201532, 0.0062241922560224, 47, 36.15645685477889, 10.84354314522111, 36, 11},
    {0.7052490226345571, 0.005042622113574379, 0.9773625882799644, 0.002603064540243908, 82, 59.74540095447289, 22.254599045527108, 60, 22},
    {0.938816891616572, 0.006149540352363459, 0.09868791634993593, 0.005740375419128821, 158, 15.99185020835337, 142.00814979164664, 16, 142},
    {0.6208419266718892, 0.008425832384773641, 0.047123289873184905, 0.00474674063742505, 175, 20.778609961985616, 154.2213900380144, 21, 154},
    {0.40433609194013903, 0.003425009391478763, 0.6573583643339056, 0.005788360721525209, 158, 77.46909137907167, 80.53090862092833, 77, 81},
    {0.10957334017818093, 0.005901993420223895, 0.542678625439622, 0.011424812519618377, 5, 3.594918316850271, 1.4050816831497286, 3, 2},
    {0.7285822041853461, 0.011740902086233752, 0.49932778150565293, 0.006428062383935049, 97, 53.92299768874065, 43.07700231125935, 54, 43},
    {0.87275889796694, 0.004173399602873204, 0.6644011609236786, 0.004958501851126621, 165, 64.43505544705742, 100.56494455294258, 65, 100},
    {0.5214527438213113, 0.005071091685115254, 0.4929507371326219, 0.006081276988716657, 86, 37.90981615695558, 48.09018384304442, 38, 48},
    {0.3522922827369159, 0.0031235220889449175, 0.0046866542348919646, 0.01030244324587838, 167, 0.6708608911141056, 166.3291391088859, 1, 166},
    {0.8718382548997186, 0.004935586591948124, 0.23899128048186133, 0.005422662003413167, 102, 20.36741544178809, 81.6325845582119, 21, 81},
    {0.6774247918820093, 0.007545591275675928, 0.109161935361171, 0.0076614445745028965, 94, 12.875005760493101, 81.1249942395069, 13, 81},
    {0.3259526415752091, 0.01131596500725704, 0.8470847046586679, 0.008189177742353894, 10, 7.821857589737454, 2.1781424102625455, 8, 2},
    {0.30415109008036567, 0.004072445705554085, 0.45296297261371044, 0.01103306723798531, 71, 25.18492884864104, 45.81507115135896, 25, 46},
    {0.7311768781249042, 0.01008020823390823, 0.8698162332380494, 0.007959219921857691, 118, 70.92467699874962, 47.075323001250375, 71, 47},
    {0.12931337529913955, 0.009232835872916546, 0.6625500016860628, 0.007576312681095144, 122, 105.15812643301034, 16.84187356698966, 105, 17},
    {0.364966832162943, 0.004158197675862067, 0.9580440711734163, 0.008303309844184998, 199, 113.02316114419614, 85.97683885580386, 113, 86},
    {0.7664852589498267, 0.004070278852742251, 0.6869802219193513, 0.0045930581509413355, 103, 45.59471609514913, 57.40528390485087, 46, 57},
    {0.9812053384103909, 0.010886224220852347, 0.7986005548739223, 0.008534429909768021, 95, 48.38977833155341, 46.61022166844659, 48, 47},
    {0.2678864255851024, 0.0030604384866169424, 0.8733202444171332, 0.008497947770526504, 63, 34.022035503187155, 28.977964496812845, 34, 29},
    {0.6726170553726041, 0.0069685596269302525, 0.28800130234538557, 0.010572817987862007, 90, 19.80891884602722, 70.19108115397277, 20, 70},
    {0.3578425396780231, 0.00893602458916732, 0.7707519477933403, 0.004770828802784548, 24, 19.232747599489713, 4.767252400510288, 19, 5},
};

} // namespace oracle
