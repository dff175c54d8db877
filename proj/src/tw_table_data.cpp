// Generated by scripts/generate_tw_tables.py -- do not edit by hand.
// Identical numbers ship as data/tw1_cdf.txt and data/tw2_cdf.txt.

#include "emdet/rmt.hpp"

#include <array>
#include <cstddef>

namespace emdet::detail {

namespace {

struct TwRow {
    double t;
    double cdf;
};

constexpr std::array<TwRow, 361> kTw1 = {{
    {-5, 0.00027791787496308406},
    {-4.9749999999999996, 0.00030646263006431357},
    {-4.9500000000000002, 0.00033766034204665596},
    {-4.9249999999999998, 0.00037172838333569407},
    {-4.9000000000000004, 0.00040889911645264039},
    {-4.875, 0.00044942067791483892},
    {-4.8499999999999996, 0.0004935577827289648},
    {-4.8250000000000002, 0.00054159254836556262},
    {-4.7999999999999998, 0.0005938253369438259},
    {-4.7750000000000004, 0.00065057561419240594},
    {-4.75, 0.00071218282358053602},
    {-4.7249999999999996, 0.00077900727384222121},
    {-4.7000000000000002, 0.00085143103793971879},
    {-4.6749999999999998, 0.0009298588613320455},
    {-4.6500000000000004, 0.0010147190772363253},
    {-4.625, 0.001106464526384709},
    {-4.5999999999999996, 0.00120557347860201},
    {-4.5750000000000002, 0.0013125505533465554},
    {-4.5499999999999998, 0.0014279276361784249},
    {-4.5250000000000004, 0.0015522647879445464},
    {-4.5, 0.0016861511433014674},
    {-4.4749999999999996, 0.0018302057950261015},
    {-4.4500000000000002, 0.0019850786604120613},
    {-4.4249999999999998, 0.0021514513258919302},
    {-4.4000000000000004, 0.0023300378658896071},
    {-4.375, 0.002521585631769904},
    {-4.3499999999999996, 0.0027268760066352341},
    {-4.3250000000000002, 0.0029467251216102326},
    {-4.2999999999999998, 0.0031819845291601225},
    {-4.2750000000000004, 0.003433541828912914},
    {-4.25, 0.0037023212413866847},
    {-4.2249999999999996, 0.003989284124984201},
    {-4.2000000000000002, 0.0042954294315839898},
    {-4.1749999999999998, 0.0046217940960521751},
    {-4.1500000000000004, 0.0049694533550093531},
    {-4.125, 0.0053395209902218788},
    {-4.0999999999999996, 0.005733149492036892},
    {-4.0750000000000002, 0.006151530138364566},
    {-4.0499999999999998, 0.0065958929848032805},
    {-4.0250000000000004, 0.0070675067616336245},
    {-4, 0.0075676786735481196},
    {-3.9749999999999996, 0.0080977540981600673},
    {-3.9500000000000002, 0.0086591161795250109},
    {-3.9249999999999998, 0.0092531853131328171},
    {-3.8999999999999999, 0.009881418519062846},
    {-3.875, 0.010545308700272805},
    {-3.8499999999999996, 0.011246383783267611},
    {-3.8250000000000002, 0.011986205738717311},
    {-3.7999999999999998, 0.012766369479920023},
    {-3.7749999999999999, 0.013588501637362213},
    {-3.75, 0.014454259207999545},
    {-3.7249999999999996, 0.015365328078279169},
    {-3.7000000000000002, 0.016323421420326525},
    {-3.6749999999999998, 0.017330277961150307},
    {-3.6499999999999999, 0.018387660125155626},
    {-3.625, 0.019497352050707004},
    {-3.5999999999999996, 0.020661157481948987},
    {-3.5750000000000002, 0.02188089753755626},
    {-3.5499999999999998, 0.023158408358570977},
    {-3.5249999999999999, 0.024495538637962552},
    {-3.5, 0.025894147035032195},
    {-3.4749999999999996, 0.027356099478270252},
    {-3.4500000000000002, 0.028883266360758858},
    {-3.4249999999999998, 0.030477519632691671},
    {-3.3999999999999999, 0.032140729796052897},
    {-3.375, 0.033874762806970035},
    {-3.3499999999999996, 0.035681476891698281},
    {-3.3250000000000002, 0.037562719282641842},
    {-3.2999999999999998, 0.039520322881238142},
    {-3.2749999999999999, 0.041556102854940664},
    {-3.25, 0.04367185317591369},
    {-3.2249999999999996, 0.045869343109431179},
    {-3.2000000000000002, 0.048150313660297442},
    {-3.1749999999999998, 0.050516473985927263},
    {-3.1499999999999999, 0.052969497785011144},
    {-3.125, 0.055511019670943774},
    {-3.0999999999999996, 0.058142631539419037},
    {-3.0750000000000002, 0.060865878939790508},
    {-3.0499999999999998, 0.063682257459952263},
    {-3.0249999999999999, 0.066593209134620246},
    {-3, 0.069600118886977952},
    {-2.9750000000000001, 0.072704311013712067},
    {-2.9499999999999997, 0.075907045723463268},
    {-2.9249999999999998, 0.079209515738704731},
    {-2.8999999999999999, 0.082612842970997719},
    {-2.875, 0.086118075279465536},
    {-2.8500000000000001, 0.089726183322206193},
    {-2.8249999999999997, 0.093438057510170633},
    {-2.7999999999999998, 0.097254505072838296},
    {-2.7749999999999999, 0.101176247244763},
    {-2.75, 0.10520391658178457},
    {-2.7250000000000001, 0.10933805441538522},
    {-2.6999999999999997, 0.11357910845331058},
    {-2.6749999999999998, 0.11792743053420808},
    {-2.6499999999999999, 0.12238327454360842},
    {-2.625, 0.12694679449814525},
    {-2.5999999999999996, 0.13161804280443323},
    {-2.5749999999999997, 0.13639696869854032},
    {-2.5499999999999998, 0.14128341687147225},
    {-2.5249999999999999, 0.14627712628554318},
    {-2.5, 0.15137772918596953},
    {-2.4749999999999996, 0.15658475031144356},
    {-2.4499999999999997, 0.16189760630685007},
    {-2.4249999999999998, 0.16731560534073003},
    {-2.3999999999999999, 0.17283794692943918},
    {-2.375, 0.178463721969392},
    {-2.3499999999999996, 0.18419191297813395},
    {-2.3249999999999997, 0.19002139454437939},
    {-2.2999999999999998, 0.19595093398654573},
    {-2.2749999999999999, 0.20197919221869456},
    {-2.25, 0.208104724822197},
    {-2.2249999999999996, 0.21432598332082969},
    {-2.1999999999999997, 0.22064131665643893},
    {-2.1749999999999998, 0.22704897286173345},
    {-2.1499999999999999, 0.23354710092620376},
    {-2.125, 0.24013375285063046},
    {-2.0999999999999996, 0.24680688588512911},
    {-2.0749999999999997, 0.25356436494516976},
    {-2.0499999999999998, 0.26040396519953463},
    {-2.0249999999999999, 0.26732337482373386},
    {-2, 0.27432019791195872},
    {-1.9749999999999996, 0.28139195754026353},
    {-1.9499999999999997, 0.28853609897327703},
    {-1.9249999999999998, 0.2957499930064395},
    {-1.8999999999999999, 0.30303093943539289},
    {-1.875, 0.31037617064392897},
    {-1.8499999999999996, 0.3177828553016066},
    {-1.8249999999999997, 0.32524810216194794},
    {-1.7999999999999998, 0.33276896395195293},
    {-1.7749999999999999, 0.34034244134347807},
    {-1.75, 0.34796548699694818},
    {-1.7249999999999996, 0.35563500966775857},
    {-1.6999999999999997, 0.36334787836566906},
    {-1.6749999999999998, 0.37110092655746718},
    {-1.6499999999999999, 0.37889095640320591},
    {-1.625, 0.38671474301631886},
    {-1.5999999999999996, 0.39456903873802679},
    {-1.5749999999999997, 0.40245057741650403},
    {-1.5499999999999998, 0.41035607868144619},
    {-1.5249999999999999, 0.41828225220477272},
    {-1.5, 0.42622580193844295},
    {-1.4749999999999996, 0.43418343032050316},
    {-1.4499999999999997, 0.44215184244075734},
    {-1.4249999999999998, 0.45012775015768047},
    {-1.3999999999999999, 0.45810787615844256},
    {-1.375, 0.46608895795426236},
    {-1.3499999999999996, 0.47406775180354405},
    {-1.3249999999999997, 0.48204103655560876},
    {-1.2999999999999998, 0.49000561740818405},
    {-1.2749999999999999, 0.49795832957212383},
    {-1.25, 0.50589604183723791},
    {-1.2249999999999996, 0.51381566003344326},
    {-1.1999999999999997, 0.52171413038186654},
    {-1.1749999999999998, 0.52958844273087735},
    {-1.1499999999999999, 0.53743563367246938},
    {-1.125, 0.54525278953475531},
    {-1.0999999999999996, 0.55303704924679087},
    {-1.0749999999999997, 0.56078560707229763},
    {-1.0499999999999998, 0.56849571520929632},
    {-1.0249999999999999, 0.57616468625303252},
    {-1, 0.58378989551998162},
    {-0.97499999999999964, 0.59136878323112663},
    {-0.95000000000000018, 0.5988988565530613},
    {-0.92499999999999982, 0.6063776914958855},
    {-0.89999999999999947, 0.61380293466717695},
    {-0.875, 0.62117230488178021},
    {-0.84999999999999964, 0.62848359462740266},
    {-0.82500000000000018, 0.63573467138642081},
    {-0.79999999999999982, 0.64292347881462697},
    {-0.77499999999999947, 0.65004803777792641},
    {-0.75, 0.65710644724835976},
    {-0.72499999999999964, 0.66409688506108155},
    {-0.70000000000000018, 0.6710176085342151},
    {-0.67499999999999982, 0.67786695495379734},
    {-0.64999999999999947, 0.6846433419262351},
    {-0.625, 0.6913452676009767},
    {-0.59999999999999964, 0.69797131076631702},
    {-0.57500000000000018, 0.7045201308214184},
    {-0.54999999999999982, 0.71099046762791507},
    {-0.52499999999999947, 0.717381141244537},
    {-0.5, 0.72369105154844682},
    {-0.47499999999999964, 0.72991917774707327},
    {-0.45000000000000018, 0.73606457778437573},
    {-0.42499999999999982, 0.74212638764559757},
    {-0.39999999999999947, 0.74810382056465208},
    {-0.375, 0.75399616613839693},
    {-0.34999999999999964, 0.759802789352096},
    {-0.32500000000000018, 0.76552312952045254},
    {-0.29999999999999982, 0.77115669914863594},
    {-0.27499999999999947, 0.77670308271774835},
    {-0.25, 0.7821619353992123},
    {-0.22499999999999964, 0.78753298170255881},
    {-0.19999999999999929, 0.79281601406108093},
    {-0.17499999999999982, 0.79801089135983816},
    {-0.14999999999999947, 0.8031175374104218},
    {-0.125, 0.8081359393768921},
    {-0.099999999999999645, 0.81306614615725048},
    {-0.074999999999999289, 0.81790826672470018},
    {-0.049999999999999822, 0.8226624684329702},
    {-0.024999999999999467, 0.8273289752898475},
    {0, 0.83190806620296587},
    {0.025000000000000355, 0.83640007320190024},
    {0.050000000000000711, 0.84080537964037438},
    {0.075000000000000178, 0.84512441838247909},
    {0.10000000000000053, 0.84935766997649287},
    {0.125, 0.85350566081996226},
    {0.15000000000000036, 0.85756896131944249},
    {0.17500000000000071, 0.86154818404829114},
    {0.20000000000000018, 0.86544398190571092},
    {0.22500000000000053, 0.86925704628014544},
    {0.25, 0.87298810522000025},
    {0.27500000000000036, 0.8766379216145378},
    {0.30000000000000071, 0.88020729138762821},
    {0.32500000000000018, 0.88369704170699037},
    {0.35000000000000053, 0.88710802921130494},
    {0.375, 0.89044113825755955},
    {0.40000000000000036, 0.89369727919079012},
    {0.42500000000000071, 0.89687738663827543},
    {0.45000000000000018, 0.89998241783009914},
    {0.47500000000000053, 0.90301335094786583},
    {0.5, 0.90597118350323691},
    {0.52500000000000036, 0.90885693074783391},
    {0.55000000000000071, 0.91167162411588065},
    {0.57500000000000018, 0.91441630970091059},
    {0.60000000000000053, 0.91709204676769518},
    {0.625, 0.91969990630041776},
    {0.65000000000000036, 0.92224096958807811},
    {0.67500000000000071, 0.92471632684789329},
    {0.70000000000000018, 0.92712707588746135},
    {0.72500000000000053, 0.92947432080626768},
    {0.75, 0.93175917073704073},
    {0.77500000000000036, 0.93398273862740799},
    {0.80000000000000071, 0.93614614006209362},
    {0.82500000000000018, 0.93825049212597234},
    {0.85000000000000053, 0.94029691230804069},
    {0.875, 0.94228651744639458},
    {0.90000000000000036, 0.94422042271421103},
    {0.92500000000000071, 0.94609974064656899},
    {0.95000000000000018, 0.94792558020799422},
    {0.97500000000000053, 0.94969904590046039},
    {1, 0.951421236911551},
    {1.0250000000000004, 0.95309324630238645},
    {1.0500000000000007, 0.95471616023494255},
    {1.0750000000000002, 0.95629105723823404},
    {1.1000000000000005, 0.95781900751285753},
    {1.125, 0.95930107227332728},
    {1.1500000000000004, 0.96073830312755859},
    {1.1750000000000007, 0.96213174149287817},
    {1.2000000000000002, 0.9634824180478373},
    {1.2250000000000005, 0.96479135221912782},
    {1.25, 0.96605955170281488},
    {1.2750000000000004, 0.96728801201914072},
    {1.3000000000000007, 0.96847771610007183},
    {1.3250000000000002, 0.96962963390874723},
    {1.3500000000000005, 0.97074472209003337},
    {1.375, 0.97182392365126902},
    {1.4000000000000004, 0.97286816767235629},
    {1.4250000000000007, 0.97387836904431879},
    {1.4500000000000002, 0.97485542823541249},
    {1.4750000000000005, 0.97580023108391256},
    {1.5, 0.97671364861666121},
    {1.5250000000000004, 0.97759653689247861},
    {1.5500000000000007, 0.97844973686954095},
    {1.5750000000000002, 0.97927407429579594},
    {1.6000000000000005, 0.98007035962157407},
    {1.625, 0.98083938793342573},
    {1.6500000000000004, 0.98158193890837886},
    {1.6750000000000007, 0.98229877678768585},
    {1.7000000000000002, 0.98299065036920918},
    {1.7250000000000005, 0.9836582930176011},
    {1.75, 0.98430242269141066},
    {1.7750000000000004, 0.98492374198631016},
    {1.8000000000000007, 0.98552293819359704},
    {1.8250000000000002, 0.98610068337319634},
    {1.8500000000000005, 0.98665763444037091},
    {1.875, 0.98719443326533118},
    {1.9000000000000004, 0.98771170678506115},
    {1.9250000000000007, 0.98821006712655923},
    {1.9500000000000002, 0.98869011174081378},
    {1.9750000000000005, 0.98915242354680166},
    {2, 0.98959757108482693},
    {2.0250000000000004, 0.99002610867854801},
    {2.0500000000000007, 0.99043857660504619},
    {2.0750000000000002, 0.99083550127230546},
    {2.1000000000000005, 0.99121739540351428},
    {2.125, 0.99158475822760717},
    {2.1500000000000004, 0.99193807567546288},
    {2.1750000000000007, 0.99227782058124492},
    {2.2000000000000002, 0.99260445288833021},
    {2.2250000000000005, 0.99291841985936635},
    {2.25, 0.99322015628991145},
    {2.2750000000000004, 0.99351008472525093},
    {2.3000000000000007, 0.9937886156799205},
    {2.3250000000000002, 0.99405614785949881},
    {2.3500000000000005, 0.99431306838427602},
    {2.375, 0.99455975301442356},
    {2.4000000000000004, 0.99479656637624725},
    {2.4250000000000007, 0.99502386218922922},
    {2.4500000000000002, 0.99524198349348014},
    {2.4750000000000005, 0.99545126287729568},
    {2.5, 0.99565202270451847},
    {2.5250000000000004, 0.99584457534143334},
    {2.5500000000000007, 0.99602922338288724},
    {2.5750000000000002, 0.99620625987742495},
    {2.6000000000000005, 0.99637596855116728},
    {2.625, 0.99653862403023552},
    {2.6500000000000004, 0.99669449206148641},
    {2.6750000000000007, 0.99684382973139241},
    {2.7000000000000002, 0.99698688568283589},
    {2.7250000000000005, 0.99712390032972031},
    {2.75, 0.99725510606917078},
    {2.7750000000000004, 0.99738072749121465},
    {2.8000000000000007, 0.99750098158582257},
    {2.8250000000000002, 0.99761607794714724},
    {2.8500000000000005, 0.99772621897487879},
    {2.875, 0.99783160007262461},
    {2.9000000000000004, 0.99793240984318976},
    {2.9250000000000007, 0.99802883028070755},
    {2.9500000000000002, 0.99812103695953125},
    {2.9750000000000005, 0.99820919921983831},
    {3, 0.99829348034988019},
    {3.0250000000000004, 0.99837403776483746},
    {3.0500000000000007, 0.99845102318224022},
    {3.0750000000000011, 0.99852458279392098},
    {3.0999999999999996, 0.9985948574344865},
    {3.125, 0.99866198274626583},
    {3.1500000000000004, 0.99872608934075469},
    {3.1750000000000007, 0.99878730295651685},
    {3.2000000000000011, 0.99884574461356934},
    {3.2249999999999996, 0.99890153076424448},
    {3.25, 0.99895477344053096},
    {3.2750000000000004, 0.99900558039792897},
    {3.3000000000000007, 0.99905405525580293},
    {3.3250000000000011, 0.99910029763430919},
    {3.3499999999999996, 0.9991444032878426},
    {3.375, 0.99918646423513602},
    {3.4000000000000004, 0.99922656888593875},
    {3.4250000000000007, 0.9992648021643934},
    {3.4500000000000011, 0.99930124562909595},
    {3.4749999999999996, 0.99933597758991133},
    {3.5, 0.99936907322157287},
    {3.5250000000000004, 0.99940060467410174},
    {3.5500000000000007, 0.99943064118012748},
    {3.5750000000000011, 0.99945924915911522},
    {3.5999999999999996, 0.999486492318583},
    {3.625, 0.99951243175234028},
    {3.6500000000000004, 0.99953712603581535},
    {3.6750000000000007, 0.99956063131851136},
    {3.7000000000000011, 0.99958300141366019},
    {3.7249999999999996, 0.99960428788510425},
    {3.75, 0.99962454013150859},
    {3.7750000000000004, 0.99964380546790121},
    {3.8000000000000007, 0.99966212920464037},
    {3.8250000000000011, 0.99967955472385828},
    {3.8499999999999996, 0.9996961235534122},
    {3.875, 0.99971187543845164},
    {3.9000000000000004, 0.99972684841059289},
    {3.9250000000000007, 0.99974107885482211},
    {3.9500000000000011, 0.99975460157412432},
    {3.9749999999999996, 0.9997674498519592},
    {4, 0.99977965551256631},
}};

constexpr std::array<TwRow, 361> kTw2 = {{
    {-5, 2.1359969847558891e-05},
    {-4.9749999999999996, 2.4968663208363406e-05},
    {-4.9500000000000002, 2.9141787546594824e-05},
    {-4.9249999999999998, 3.3959925817391437e-05},
    {-4.9000000000000004, 3.9513939974386304e-05},
    {-4.875, 4.5906100752047165e-05},
    {-4.8499999999999996, 5.3251316805733457e-05},
    {-4.8250000000000002, 6.1678468797705599e-05},
    {-4.7999999999999998, 7.1331853944362432e-05},
    {-4.7750000000000004, 8.2372746408164297e-05},
    {-4.75, 9.4981078721881706e-05},
    {-4.7249999999999996, 0.00010935724916621319},
    {-4.7000000000000002, 0.00012572405967988863},
    {-4.6749999999999998, 0.00014432878845764793},
    {-4.6500000000000004, 0.00016544540088211349},
    {-4.625, 0.00018937690183461637},
    {-4.5999999999999996, 0.00021645783173442022},
    {-4.5750000000000002, 0.00024705690786145431},
    {-4.5499999999999998, 0.00028157981162208769},
    {-4.5250000000000004, 0.00032047212141840287},
    {-4.5, 0.00036422238967929424},
    {-4.4749999999999996, 0.00041336536140384805},
    {-4.4500000000000002, 0.00046848533025890154},
    {-4.4249999999999998, 0.00053021962686273399},
    {-4.4000000000000004, 0.00059926223238159979},
    {-4.375, 0.00067636750896908366},
    {-4.3499999999999996, 0.00076235403689913254},
    {-4.3250000000000002, 0.00085810854648654602},
    {-4.2999999999999998, 0.00096458993106991557},
    {-4.2750000000000004, 0.001082833325454675},
    {-4.25, 0.0012139542323004965},
    {-4.2249999999999996, 0.0013591526769943156},
    {-4.2000000000000002, 0.0015197173695983654},
    {-4.1749999999999998, 0.0016970298505201767},
    {-4.1500000000000004, 0.0018925685946318909},
    {-4.125, 0.0021079130466972887},
    {-4.0999999999999996, 0.0023447475591604166},
    {-4.0750000000000002, 0.002604865201637321},
    {-4.0499999999999998, 0.0028901714098507367},
    {-4.0250000000000004, 0.0032026874402823866},
    {-4, 0.0035445535955104489},
    {-3.9749999999999996, 0.0039180321840761798},
    {-3.9500000000000002, 0.004325510177801712},
    {-3.9249999999999998, 0.0047695015287914028},
    {-3.8999999999999999, 0.005252649107903384},
    {-3.875, 0.0057777262263049422},
    {-3.8499999999999996, 0.0063476377018370639},
    {-3.8250000000000002, 0.0069654204323322064},
    {-3.7999999999999998, 0.0076342434387678517},
    {-3.7749999999999999, 0.0083574073422048971},
    {-3.75, 0.0091383432398746377},
    {-3.7249999999999996, 0.0099806109475365883},
    {-3.7000000000000002, 0.010887896577341781},
    {-3.6749999999999998, 0.011864009422905084},
    {-3.6499999999999999, 0.0129128781261024},
    {-3.625, 0.014038546103274645},
    {-3.5999999999999996, 0.015245166212008797},
    {-3.5750000000000002, 0.016536994643485431},
    {-3.5499999999999998, 0.017918384029495214},
    {-3.5249999999999999, 0.019393775757624885},
    {-3.5, 0.020967691492767601},
    {-3.4749999999999996, 0.022644723907991157},
    {-3.4500000000000002, 0.024429526632875755},
    {-3.4249999999999998, 0.026326803432671752},
    {-3.3999999999999999, 0.028341296636984138},
    {-3.375, 0.030477774842143788},
    {-3.3499999999999996, 0.032741019916903494},
    {-3.3250000000000002, 0.035135813346584763},
    {-3.2999999999999998, 0.037666921956237012},
    {-3.2749999999999999, 0.040339083058707217},
    {-3.25, 0.043156989078726539},
    {-3.2249999999999996, 0.046125271709121556},
    {-3.2000000000000002, 0.049248485660045326},
    {-3.1749999999999998, 0.052531092066617366},
    {-3.1499999999999999, 0.055977441624535461},
    {-3.125, 0.059591757527037062},
    {-3.0999999999999996, 0.063378118279986156},
    {-3.0750000000000002, 0.067340440474833785},
    {-3.0499999999999998, 0.071482461601681771},
    {-3.0249999999999999, 0.075807722986666173},
    {-3, 0.080319552939332697},
    {-2.9750000000000001, 0.085021050196577796},
    {-2.9499999999999997, 0.08991506775005545},
    {-2.9249999999999998, 0.095004197143717883},
    {-2.8999999999999999, 0.10029075332730147},
    {-2.875, 0.10577676015016522},
    {-2.8500000000000001, 0.1114639365778553},
    {-2.8249999999999997, 0.11735368371120146},
    {-2.7999999999999998, 0.123447072684562},
    {-2.7749999999999999, 0.12974483351616675},
    {-2.75, 0.13624734497924124},
    {-2.7250000000000001, 0.14295462555790142},
    {-2.6999999999999997, 0.14986632554659249},
    {-2.6749999999999998, 0.15698172034624153},
    {-2.6499999999999999, 0.1642997050042842},
    {-2.625, 0.17181879003935935},
    {-2.5999999999999996, 0.17953709858483058},
    {-2.5749999999999997, 0.18745236487837166},
    {-2.5499999999999998, 0.19556193411775899},
    {-2.5249999999999999, 0.20386276369575085},
    {-2.5, 0.21235142581958347},
    {-2.4749999999999996, 0.22102411151322779},
    {-2.4499999999999997, 0.22987663599315145},
    {-2.4249999999999998, 0.23890444540103623},
    {-2.3999999999999999, 0.24810262486966828},
    {-2.375, 0.25746590789120999},
    {-2.3499999999999996, 0.26698868695022532},
    {-2.3249999999999997, 0.27666502537728321},
    {-2.2999999999999998, 0.28648867037270098},
    {-2.2749999999999999, 0.29645306714409936},
    {-2.25, 0.30655137409591282},
    {-2.2249999999999996, 0.31677647900390454},
    {-2.1999999999999997, 0.32712101610308192},
    {-2.1749999999999998, 0.337577384013239},
    {-2.1499999999999999, 0.34813776442267663},
    {-2.125, 0.35879414144748695},
    {-2.0999999999999996, 0.36953832158116534},
    {-2.0749999999999997, 0.38036195414721341},
    {-2.0499999999999998, 0.39125655216586119},
    {-2.0249999999999999, 0.40221351354501889},
    {-2, 0.41322414250511297},
    {-1.9749999999999996, 0.42427967114753617},
    {-1.9499999999999997, 0.43537128107701933},
    {-1.9249999999999998, 0.44649012498934487},
    {-1.8999999999999999, 0.45762734813739503},
    {-1.875, 0.46877410959059596},
    {-1.8499999999999996, 0.47992160320529736},
    {-1.8249999999999997, 0.4910610782265406},
    {-1.7999999999999998, 0.50218385944498034},
    {-1.7749999999999999, 0.51328136683633585},
    {-1.75, 0.52434513461475607},
    {-1.7249999999999996, 0.53536682963571813},
    {-1.6999999999999997, 0.54633826908858318},
    {-1.6749999999999998, 0.55725143742366101},
    {-1.6499999999999999, 0.56809850246354621},
    {-1.625, 0.57887183065350334},
    {-1.5999999999999996, 0.58956400141086152},
    {-1.5749999999999997, 0.60016782053856044},
    {-1.5499999999999998, 0.61067633267328592},
    {-1.5249999999999999, 0.62108283274385001},
    {-1.5, 0.63138087642071672},
    {-1.4749999999999996, 0.6415642895427397},
    {-1.4499999999999997, 0.65162717651223045},
    {-1.4249999999999998, 0.66156392765443872},
    {-1.3999999999999999, 0.67136922554233447},
    {-1.375, 0.68103805029221687},
    {-1.3499999999999996, 0.69056568384009365},
    {-1.3249999999999997, 0.69994771321305438},
    {-1.2999999999999998, 0.70918003281383646},
    {-1.2749999999999999, 0.71825884574055299},
    {-1.25, 0.72718066416706351},
    {-1.2249999999999996, 0.73594230881271694},
    {-1.1999999999999997, 0.74454090753316038},
    {-1.1749999999999998, 0.75297389306660201},
    {-1.1499999999999999, 0.76123899997232958},
    {-1.125, 0.76933426080038958},
    {-1.0999999999999996, 0.77725800153321101},
    {-1.0749999999999997, 0.78500883634146179},
    {-1.0499999999999998, 0.79258566169775491},
    {-1.0249999999999999, 0.7999876498927907},
    {-1, 0.8072142419992796},
    {-0.97499999999999964, 0.81426514032944564},
    {-0.95000000000000018, 0.82114030043220732},
    {-0.92499999999999982, 0.82783992267601547},
    {-0.89999999999999947, 0.83436444346322225},
    {-0.875, 0.84071452612131992},
    {-0.84999999999999964, 0.84689105151578592},
    {-0.82500000000000018, 0.85289510842841487},
    {-0.79999999999999982, 0.85872798374404713},
    {-0.77499999999999947, 0.86439115248739873},
    {-0.75, 0.86988626775043609},
    {-0.72499999999999964, 0.87521515054924393},
    {-0.70000000000000018, 0.88037977964788283},
    {-0.67499999999999982, 0.88538228138495256},
    {-0.64999999999999947, 0.89022491953697791},
    {-0.625, 0.8949100852508336},
    {-0.59999999999999964, 0.89944028707559631},
    {-0.57500000000000018, 0.90381814112232484},
    {-0.54999999999999982, 0.90804636137828199},
    {-0.52499999999999947, 0.91212775020021797},
    {-0.5, 0.91606518900928391},
    {-0.47499999999999964, 0.9198616292082834},
    {-0.45000000000000018, 0.92352008333993363},
    {-0.42499999999999982, 0.92704361650291667},
    {-0.39999999999999947, 0.93043533804061207},
    {-0.375, 0.93369839351551942},
    {-0.34999999999999964, 0.93683595698059752},
    {-0.32500000000000018, 0.93985122355696327},
    {-0.29999999999999982, 0.94274740232571186},
    {-0.27499999999999947, 0.94552770953996701},
    {-0.25, 0.94819536216175249},
    {-0.22499999999999964, 0.9507535717266935},
    {-0.19999999999999929, 0.95320553853823153},
    {-0.17499999999999982, 0.95555444619164676},
    {-0.14999999999999947, 0.95780345642690778},
    {-0.125, 0.9599557043082565},
    {-0.099999999999999645, 0.96201429372722491},
    {-0.074999999999999289, 0.96398229322490236},
    {-0.049999999999999822, 0.96586273212820517},
    {-0.024999999999999467, 0.96765859699414425},
    {0, 0.96937282835526106},
    {0.025000000000000355, 0.97100831775870966},
    {0.050000000000000711, 0.97256790509087043},
    {0.075000000000000178, 0.9740543761788153},
    {0.10000000000000053, 0.97547046065946041},
    {0.125, 0.97681883010687609},
    {0.15000000000000036, 0.97810209640784929},
    {0.17500000000000071, 0.97932281037554392},
    {0.20000000000000018, 0.98048346059088809},
    {0.22500000000000053, 0.98158647246115582},
    {0.25, 0.98263420748512209},
    {0.27500000000000036, 0.98362896271410905},
    {0.30000000000000071, 0.98457297039824831},
    {0.32500000000000018, 0.98546839780734019},
    {0.35000000000000053, 0.98631734721572262},
    {0.375, 0.98712185604076541},
    {0.40000000000000036, 0.98788389712467539},
    {0.42500000000000071, 0.98860537914956692},
    {0.45000000000000018, 0.98928814717589242},
    {0.47500000000000053, 0.98993398329460358},
    {0.5, 0.99054460738371508},
    {0.52500000000000036, 0.99112167796012363},
    {0.55000000000000071, 0.99166679311792905},
    {0.57500000000000018, 0.9921814915447712},
    {0.60000000000000053, 0.99266725360803643},
    {0.625, 0.99312550250306753},
    {0.65000000000000036, 0.99355760545595406},
    {0.67500000000000071, 0.99396487497370967},
    {0.70000000000000018, 0.99434857013508571},
    {0.72500000000000053, 0.99470989791553155},
    {0.75, 0.99505001454023778},
    {0.77500000000000036, 0.99537002685949882},
    {0.80000000000000071, 0.99567099374098378},
    {0.82500000000000018, 0.99595392747383293},
    {0.85000000000000053, 0.99621979517986547},
    {0.875, 0.99646952022744872},
    {0.90000000000000036, 0.99670398364396695},
    {0.92500000000000071, 0.99692402552305726},
    {0.95000000000000018, 0.99713044642317084},
    {0.97500000000000053, 0.99732400875421612},
    {1, 0.99750543814938886},
    {1.0250000000000004, 0.99767542481953675},
    {1.0500000000000007, 0.99783462488764085},
    {1.0750000000000002, 0.99798366170130814},
    {1.1000000000000005, 0.99812312712132811},
    {1.125, 0.99825358278462273},
    {1.1500000000000004, 0.99837556134011696},
    {1.1750000000000007, 0.99848956765625274},
    {1.2000000000000002, 0.99859607999905986},
    {1.2250000000000005, 0.9986955511799005},
    {1.25, 0.99878840967211457},
    {1.2750000000000004, 0.99887506069602183},
    {1.3000000000000007, 0.99895588727183704},
    {1.3250000000000002, 0.99903125124018133},
    {1.3500000000000005, 0.99910149425004646},
    {1.375, 0.99916693871414985},
    {1.4000000000000004, 0.99922788873170643},
    {1.4250000000000007, 0.99928463097881526},
    {1.4500000000000002, 0.99933743556664623},
    {1.4750000000000005, 0.99938655686779498},
    {1.5, 0.99943223431115558},
    {1.5250000000000004, 0.9994746931458014},
    {1.5500000000000007, 0.99951414517437587},
    {1.5750000000000002, 0.99955078945655218},
    {1.6000000000000005, 0.99958481298320423},
    {1.625, 0.99961639132189928},
    {1.6500000000000004, 0.99964568923443931},
    {1.6750000000000007, 0.99967286126712074},
    {1.7000000000000002, 0.99969805231449649},
    {1.7250000000000005, 0.99972139815735706},
    {1.75, 0.99974302597570341},
    {1.7750000000000004, 0.9997630548375287},
    {1.8000000000000007, 0.99978159616413798},
    {1.8250000000000002, 0.99979875417285013},
    {1.8500000000000005, 0.99981462629781215},
    {1.875, 0.99982930358979527},
    {1.9000000000000004, 0.99984287109565684},
    {1.9250000000000007, 0.99985540821833108},
    {1.9500000000000002, 0.99986698905805127},
    {1.9750000000000005, 0.99987768273560262},
    {2, 0.99988755369830917},
    {2.0250000000000004, 0.99989666200952065},
    {2.0500000000000007, 0.99990506362227494},
    {2.0750000000000002, 0.99991281063786053},
    {2.1000000000000005, 0.99991995154994728},
    {2.125, 0.99992653147493216},
    {2.1500000000000004, 0.99993259236917076},
    {2.1750000000000007, 0.99993817323368983},
    {2.2000000000000002, 0.99994331030700223},
    {2.2250000000000005, 0.99994803724660208},
    {2.25, 0.99995238529968877},
    {2.2750000000000004, 0.99995638346369653},
    {2.3000000000000007, 0.99996005863712645},
    {2.3250000000000002, 0.99996343576118196},
    {2.3500000000000005, 0.99996653795272072},
    {2.375, 0.99996938662895796},
    {2.4000000000000004, 0.9999720016243745},
    {2.4250000000000007, 0.99997440130027637},
    {2.4500000000000002, 0.99997660264737676},
    {2.4750000000000005, 0.99997862138182958},
    {2.5, 0.99998047203505613},
    {2.5250000000000004, 0.99998216803774143},
    {2.5500000000000007, 0.9999837217983214},
    {2.5750000000000002, 0.99998514477630573},
    {2.6000000000000005, 0.99998644755071264},
    {2.625, 0.99998763988393313},
    {2.6500000000000004, 0.99998873078129091},
    {2.6750000000000007, 0.99998972854655743},
    {2.7000000000000002, 0.99999064083367761},
    {2.7250000000000005, 0.99999147469493332},
    {2.75, 0.99999223662577685},
    {2.7750000000000004, 0.99999293260653543},
    {2.8000000000000007, 0.99999356814120122},
    {2.8250000000000002, 0.999994148293468},
    {2.8500000000000005, 0.99999467772022221},
    {2.875, 0.99999516070263816},
    {2.9000000000000004, 0.9999956011750335},
    {2.9250000000000007, 0.9999960027516428},
    {2.9500000000000002, 0.99999636875144415},
    {2.9750000000000005, 0.99999670222116677},
    {3, 0.99999700595660723},
    {3.0250000000000004, 0.99999728252237141},
    {3.0500000000000007, 0.99999753427014137},
    {3.0750000000000011, 0.99999776335558332},
    {3.0999999999999996, 0.99999797175397798},
    {3.125, 0.99999816127467012},
    {3.1500000000000004, 0.99999833357442636},
    {3.1750000000000007, 0.99999849016975928},
    {3.2000000000000011, 0.99999863244831866},
    {3.2249999999999996, 0.99999876167939084},
    {3.25, 0.99999887902359763},
    {3.2750000000000004, 0.99999898554182209},
    {3.3000000000000007, 0.99999908220344869},
    {3.3250000000000011, 0.99999916989395021},
    {3.3499999999999996, 0.99999924942187057},
    {3.375, 0.99999932152525572},
    {3.4000000000000004, 0.99999938687757406},
    {3.4250000000000007, 0.99999944609315394},
    {3.4500000000000011, 0.99999949973218938},
    {3.4749999999999996, 0.99999954830533644},
    {3.5, 0.99999959227794033},
    {3.5250000000000004, 0.99999963207391429},
    {3.5500000000000007, 0.99999966807929175},
    {3.5750000000000011, 0.99999970064550558},
    {3.5999999999999996, 0.99999973009237364},
    {3.625, 0.99999975671085517},
    {3.6500000000000004, 0.99999978076555962},
    {3.6750000000000007, 0.99999980249705978},
    {3.7000000000000011, 0.99999982212400129},
    {3.7249999999999996, 0.99999983984503704},
    {3.75, 0.99999985584059792},
    {3.7750000000000004, 0.99999987027450821},
    {3.8000000000000007, 0.99999988329546785},
    {3.8250000000000011, 0.99999989503840636},
    {3.8499999999999996, 0.99999990562571828},
    {3.875, 0.99999991516839026},
    {3.9000000000000004, 0.99999992376703339},
    {3.9250000000000007, 0.99999993151282784},
    {3.9500000000000011, 0.99999993848837399},
    {3.9749999999999996, 0.99999994476848109},
    {4, 0.99999995042087952},
}};

}  // namespace

void builtin_tw_rows(int order, std::vector<double>& t, std::vector<double>& cdf) {
    t.clear();
    cdf.clear();
    if (order == 1) {
        t.reserve(kTw1.size());
        cdf.reserve(kTw1.size());
        for (const auto& r : kTw1) {
            t.push_back(r.t);
            cdf.push_back(r.cdf);
        }
    } else {
        t.reserve(kTw2.size());
        cdf.reserve(kTw2.size());
        for (const auto& r : kTw2) {
            t.push_back(r.t);
            cdf.push_back(r.cdf);
        }
    }
}

}  // namespace emdet::detail
