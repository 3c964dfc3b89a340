// Chebyshev coefficient tables (in u = 2p - 1 on [-1, 1]) for the
// Riemann-Siegel correction functions C_0(p)..C_14(p).
pub(crate) const RS_CHEB: [&[f64]; 15] = [
    &[
        0.6426672862397684,
        1.757409392968932e-40,
        0.27197299999785507,
        -1.2388558224474228e-41,
        0.010738605819340285,
        -4.671081109404239e-42,
        -0.0013743815296336614,
        -8.902006741630889e-44,
        -0.00012468221880320676,
        1.5159443476897517e-42,
        -5.764599706783048e-07,
        1.8049606000253135e-42,
        2.728067429580452e-07,
        8.696538098314055e-43,
        8.07795305950047e-09,
        -1.9048573910546454e-42,
        -2.0884608068869654e-10,
        1.4079987193047278e-42,
        -1.3115561854739528e-11,
        2.71802673407012e-42,
        -1.4207987228087186e-14,
        4.028954191581696e-42,
        1.0271701357931162e-14,
        2.088325569827851e-42,
        1.3974598819518373e-16,
        2.8469630864735075e-43,
        -4.4841187339522885e-18,
        1.3793925502333267e-42,
        -1.1830599573845289e-19,
    ],
    &[
        6.336841321829187e-38,
        0.010697913921003001,
        -2.8452371403505684e-38,
        0.017170651243377882,
        -1.0387638065274054e-38,
        0.002793211149788471,
        3.2785195423423656e-39,
        -3.6375653719275045e-05,
        -1.544756731074278e-39,
        -2.7108955231150888e-05,
        1.1428790984224086e-39,
        -1.0483749866752774e-06,
        1.8969453411880433e-39,
        5.886467166527572e-08,
        -3.466461137516009e-39,
        4.322967268502779e-09,
        -8.595551464788253e-40,
        -1.1369591588273712e-11,
        -7.871185230797446e-40,
        -6.6998339103553274e-12,
        -2.5631185427553236e-39,
        -1.0079997652808475e-13,
        1.3723937228805102e-39,
        5.152488009222117e-15,
        4.877025513123711e-41,
        1.521695447183697e-16,
        1.3959706517276951e-39,
        -1.8619464833687103e-18,
        1.3203786315139598e-39,
        -1.1301846184246265e-19,
    ],
    &[
        0.0031461158539889122,
        6.436984863097721e-35,
        -0.0023087838845307503,
        -4.2565628405485026e-36,
        5.769820766689844e-05,
        -1.733958110497869e-36,
        0.000352388620236659,
        -7.554477204766865e-38,
        2.5246667458684434e-05,
        5.293619299303969e-37,
        -3.442821197193136e-06,
        5.634743890136831e-37,
        -3.535074556622459e-07,
        2.8858672162391647e-37,
        3.730830183792625e-09,
        -6.006692983339536e-37,
        1.2776951864116635e-09,
        4.6225710140686436e-37,
        2.1874616204147057e-11,
        8.908143383722908e-37,
        -1.914141096461037e-12,
        1.3143531834687208e-36,
        -6.562883102168523e-14,
        6.755794668439728e-37,
        1.2586009182411715e-15,
        8.805151170909642e-38,
        8.140076623881463e-17,
    ],
    &[
        6.718269610038768e-33,
        7.123256221203874e-05,
        -3.2352973675477605e-33,
        0.00023234305298164808,
        -1.1063044381109805e-33,
        -0.00012929912045472474,
        3.476272181034693e-34,
        1.807449641367144e-05,
        -1.515296470120854e-34,
        6.5261851872204395e-06,
        1.0473965315051816e-34,
        -1.1696365378521986e-07,
        1.7916740225841885e-34,
        -7.349476126518126e-08,
        -3.300035412731203e-34,
        -1.7750910077907072e-09,
        -8.134228434126835e-35,
        2.555552961326525e-10,
        -7.94413663513612e-35,
        1.13766366005373e-11,
        -2.498032334762643e-34,
        -3.349863898530277e-13,
        1.261294356586579e-34,
        -2.5537379354163893e-14,
        1.4527448031857718e-36,
        6.766500771321871e-17,
        1.3224968722636188e-34,
        2.976888471991973e-17,
        1.1915662777338667e-34,
        2.995220808756687e-19,
    ],
    &[
        0.0001676574524669686,
        3.0868827806791837e-30,
        -0.00022728768943416726,
        -1.902592235826715e-31,
        6.477387188445696e-05,
        -8.433157319863752e-32,
        -8.49220050012541e-06,
        -5.6045222206202546e-33,
        -2.6161407245219076e-06,
        2.4134137068623055e-32,
        8.336764968733215e-07,
        2.2546493481504727e-32,
        6.324704037544833e-08,
        1.2370210115248347e-32,
        -1.0059949403001072e-08,
        -2.4392768216716617e-32,
        -7.822677204130333e-10,
        1.95812411545309e-32,
        3.16765828534986e-11,
        3.767285468563325e-32,
        3.5006944702052894e-12,
        5.529938054079442e-32,
        -1.4314814511443748e-14,
        2.819205873621844e-32,
        -7.269402707921764e-15,
        3.5074521067852604e-33,
        -8.78055659483596e-17,
        1.795790478426652e-32,
        8.15025447495456e-18,
        7.175515866064996e-32,
        1.9208397058222796e-19,
    ],
    &[
        1.6505454294655115e-28,
        8.828845234808902e-05,
        -8.521412020021444e-29,
        -1.562868496932839e-05,
        -2.7332367019871803e-29,
        -1.8342447697160084e-07,
        8.564643248576853e-30,
        2.1097267874937543e-06,
        -3.4102385611398925e-30,
        -6.657016174096388e-07,
        2.1880525690673947e-30,
        2.771474120506843e-08,
        3.865675063661849e-30,
        1.8111249375764875e-08,
        -7.178253731940282e-30,
        -5.765890811715977e-10,
        -1.759333085286966e-30,
        -1.8675033426083153e-10,
        -1.8276721624422948e-30,
        -1.1051608917093023e-13,
        -5.561525376635529e-30,
        7.870643368056824e-13,
        2.6404743662440864e-30,
        1.4458350995655118e-14,
        -3.8049247055716633e-32,
        -1.5814591908609535e-15,
        2.8622760810474773e-30,
        -4.910638830364016e-17,
        2.4475090345380147e-30,
        1.6444201220575337e-18,
    ],
    &[
        1.2189742141068971e-05,
        4.5144249191978453e-26,
        -1.3829760140503787e-05,
        -2.573548636041727e-27,
        5.11096730499826e-06,
        -1.2516033151716945e-27,
        -2.0458136450386076e-06,
        -1.0981054413421454e-28,
        4.938136644832012e-07,
        3.345071913804865e-28,
        -3.6187528349622816e-08,
        2.674441823535596e-28,
        -1.287690509807986e-08,
        1.5900384853582164e-28,
        2.574412111144866e-09,
        -2.9594702417715094e-28,
        1.3641457070791684e-10,
        2.482920045097264e-28,
        -3.032439574084382e-11,
        4.769472325683727e-28,
        -1.3216671239902531e-12,
        6.961672951104394e-28,
        1.3031652130009343e-13,
        3.5207613598001714e-28,
        6.635883553200677e-15,
        4.174116945322909e-29,
        -2.460035654796081e-16,
        2.199616788145641e-28,
        -1.6815279208401797e-17,
        8.987755688141212e-28,
        1.8937932105495408e-19,
    ],
    &[
        1.4404502734225973e-24,
        1.2768657797438219e-05,
        -7.970699235211262e-25,
        -3.862933834641599e-06,
        -2.4015333671436836e-25,
        1.369383093646788e-06,
        7.517778308312813e-26,
        -2.764704168279349e-07,
        -2.6939718487894213e-26,
        1.028343682334521e-08,
        1.5898780987521544e-26,
        1.1755066568169087e-08,
        2.9095058248857545e-26,
        -3.0550489158469952e-09,
        -5.44775733503175e-26,
        1.1430441899346975e-10,
        -1.3281072693577062e-26,
        5.1308186753601955e-11,
        -1.4638907728114106e-26,
        -2.8355099102514883e-12,
        -4.319129529833005e-26,
        -4.266654161650472e-13,
        1.922017825017371e-26,
        1.276357300849013e-14,
        -8.184769781297742e-28,
        1.8569080032430774e-15,
        2.1609401608194055e-26,
        -1.53642870958292e-17,
        1.7463437480446265e-26,
        -4.411559108500816e-18,
    ],
    &[
        1.2285585088091077e-06,
        2.5938897165553e-22,
        -1.1940986396077243e-06,
        -1.3547548108469637e-23,
        -6.099999653919516e-08,
        -7.302933683229307e-24,
        -8.844063913885959e-09,
        -7.843769976342263e-25,
        3.169816317194402e-08,
        1.815296976686095e-24,
        -1.4200472095883398e-08,
        1.1975471765665907e-24,
        3.1614105915471463e-09,
        7.856818411234586e-25,
        -2.4436315262115746e-10,
        -1.373806355339787e-24,
        -4.322631236563356e-11,
        1.2069273215759729e-24,
        9.017681907740424e-12,
        2.3149431695932487e-24,
        1.4698907920279045e-13,
        3.358348422367242e-24,
        -8.703305382587196e-14,
        1.6851149050778262e-24,
        -8.379770802703264e-16,
        1.9002078457642755e-25,
        3.887455055340963e-16,
        1.0317277624776366e-24,
        6.240684027426884e-18,
        4.313749181746796e-24,
        -9.229158374400511e-19,
    ],
    &[
        5.222004260936907e-21,
        3.020797043854279e-06,
        -3.0967364866469773e-21,
        -7.069522324295637e-07,
        -8.77672036573435e-22,
        2.211652030252863e-07,
        2.7499692184256903e-22,
        -6.51579761280399e-08,
        -8.711743915121105e-23,
        1.6208733981111653e-08,
        4.665669492197667e-23,
        -2.9485298342057876e-09,
        8.882484362500235e-23,
        2.3545287037393244e-10,
        -1.6770184061041726e-22,
        4.051032345520422e-11,
        -4.068369149195382e-23,
        -1.2906638267585076e-11,
        -4.7464627927046e-23,
        7.518327924858827e-13,
        -1.360289543880854e-22,
        1.2819168025831096e-13,
        5.653133416376598e-23,
        -1.189742099049826e-14,
        -4.151125179084442e-24,
        -7.626057121894283e-16,
        6.615932371408316e-23,
        6.033524415689224e-17,
        5.0290788763706434e-23,
        3.099957956419771e-18,
        -6.34367158287623e-23,
        -1.4656889243546823e-19,
    ],
    &[
        6.98115792820144e-08,
        6.454001074586348e-19,
        5.187602099796054e-08,
        -3.0511233066107315e-20,
        -1.5025689400412813e-07,
        -1.8467557964830767e-20,
        5.385175415427909e-08,
        -2.3165500601263364e-21,
        -1.200947094720906e-08,
        4.249586385284281e-21,
        1.84414161121158e-09,
        2.183770294634723e-21,
        -6.05128592293739e-11,
        1.632365963494589e-21,
        -5.891392763805483e-11,
        -2.664038654434531e-21,
        1.6515772643066303e-11,
        2.4552609389352902e-21,
        -1.6489918255890898e-12,
        4.7025129053664176e-21,
        -8.450006856359725e-14,
        6.777288376552508e-21,
        3.023517796063589e-14,
        3.3743858042928794e-21,
        -6.179199127955551e-16,
        3.611629327013827e-22,
        -2.1506745323485554e-16,
        2.0230415032468374e-21,
        5.23410780761617e-18,
        8.660786399969798e-21,
        8.728919133025247e-19,
    ],
    &[
        8.267595700877477e-18,
        7.205266886010942e-07,
        -5.254564886370363e-18,
        -9.524651967587282e-08,
        -1.4028406687577889e-18,
        6.860710334298477e-09,
        4.408203877263359e-19,
        -1.0861860771241714e-09,
        -1.2076158734069303e-19,
        5.647654553134267e-10,
        5.745197929709629e-20,
        -3.0303135728699446e-10,
        1.1459084910827587e-19,
        1.0161023506103653e-10,
        -2.1807691866262945e-19,
        -2.121869525462814e-11,
        -5.266839513969658e-20,
        2.3594064929059552e-12,
        -6.488834015564384e-20,
        2.493546334906232e-14,
        -1.8093537808726103e-19,
        -4.488747195284729e-14,
        6.993478598705564e-20,
        4.093735324955701e-15,
        -7.517412264622272e-21,
        2.1624473136749504e-16,
        8.553774932262028e-20,
        -4.055036995586355e-17,
        6.082645874241188e-20,
        -8.604480056065088e-19,
        -8.560831306162149e-20,
        1.829435984841841e-19,
        2.083522055677758e-19,
        5.275577069769034e-20,
        -1.107909189817977e-19,
        4.39463682954076e-20,
        -5.3153334485853196e-20,
        1.0492679947276108e-19,
        6.200185087486427e-20,
        -3.1644181578607233e-20,
        -1.1334617726719901e-19,
        -1.2198337845951092e-19,
        -7.06594261594397e-20,
        -2.965578760604796e-20,
        -2.1323519401308534e-20,
        -5.98165279032399e-20,
        1.2924780821811907e-19,
        6.173651121913796e-21,
        -1.0774288013002753e-19,
        2.0520978052578403e-20,
        -7.776946912812802e-22,
        1.402555131991203e-19,
        6.279405512747841e-20,
        -9.18600013254254e-21,
        5.667405707512663e-20,
        5.155252400013857e-21,
        1.628028259682374e-19,
        -3.1956608742121875e-22,
        -1.986612364334058e-20,
        -4.32540867584022e-20,
        1.3672801954080352e-19,
        2.2851358090903633e-19,
        -9.142955366054883e-20,
        1.4038151451837182e-20,
        5.366224951922701e-20,
        9.692351900532596e-20,
        7.068089471925211e-20,
        -9.738490403772331e-20,
        -2.5485380302955548e-21,
        1.4132853677611755e-19,
        2.6996146555794657e-20,
        2.0695584335572802e-20,
        -1.2425240728287656e-19,
    ],
    &[
        -2.9740973763736044e-08,
        7.071313833981899e-16,
        6.068000942739394e-08,
        -2.9773192331288493e-17,
        -4.239498828504006e-08,
        -2.059008211421064e-17,
        1.3933135986082648e-08,
        -2.917760527364653e-18,
        -3.195666367426891e-09,
        4.361650147003871e-18,
        7.144489880524889e-10,
        1.574019551613287e-18,
        -1.4990392715508553e-10,
        1.431397309910331e-18,
        2.5219630037032567e-11,
        -2.1585033001497305e-18,
        -2.6213287821216795e-12,
        2.0900510192702898e-18,
        -3.004745375402223e-14,
        3.9971733837534505e-18,
        6.173641633570038e-14,
        5.72042698567624e-18,
        -8.706584780062769e-15,
        2.8264826316794276e-18,
        1.2089516535763693e-16,
        2.864757185471331e-19,
        8.119137867072425e-17,
        1.6580166665633708e-18,
        -6.451330109484593e-18,
        7.27238417862211e-18,
        1.863132796086182e-18,
        -5.173369186744746e-20,
        -5.377889710458932e-18,
        -1.3281242578585337e-18,
        2.842527230070766e-18,
        -1.12283192235362e-18,
        1.3551634485659156e-18,
        -2.709932629245241e-18,
        -1.6258870328436808e-18,
        8.15870658844118e-19,
        2.9424134361089344e-18,
        3.1666971005907395e-18,
        1.849437212875558e-18,
        7.790429710409912e-19,
        5.61726228020505e-19,
        1.5363629565354475e-18,
        -3.3397529376656784e-18,
        -1.5602313604581452e-19,
        2.7921752428605078e-18,
        -5.195146554068806e-19,
        -1.5222520799993318e-20,
        -3.6443653076785096e-18,
        -1.6470233853111596e-18,
        2.183612552623459e-19,
        -1.463041401962016e-18,
        -1.6581526521772256e-19,
        -4.204702762856302e-18,
        -1.6947893090837508e-20,
        5.30121168362574e-19,
        1.0920846726914914e-18,
        -3.559901537147475e-18,
        -5.923992434183756e-18,
        2.3242835683615952e-18,
        -3.5692935423637912e-19,
        -1.4144473534249854e-18,
        -2.5159950279299397e-18,
        -1.8225836552615286e-18,
        2.509443072005365e-18,
        6.27199106586935e-20,
        -3.665247723753466e-18,
        -7.336197906347946e-19,
        -5.13240747149532e-19,
        3.2007221109284148e-18,
    ],
    &[
        5.580118158674726e-15,
        2.0159609614507316e-07,
        -3.8017195158757625e-15,
        -8.162946891781547e-09,
        -9.574467652608087e-16,
        -9.21478484946564e-09,
        3.023519907493871e-16,
        3.002237113516455e-09,
        -6.962142921852096e-17,
        -7.320594538518787e-10,
        2.8348346668131356e-17,
        1.457900772317848e-10,
        6.001583939862713e-17,
        -2.161436178930356e-11,
        -1.1500082477848788e-16,
        1.6683390307777419e-12,
        -2.7660412314189708e-17,
        2.0502579117292916e-13,
        -3.590801850851396e-17,
        -9.424607429388407e-14,
        -9.756840813420295e-17,
        1.4477964592645682e-14,
        3.49108871361857e-17,
        -7.941013841277307e-16,
        -5.078461331527072e-18,
        -1.1072161229482815e-16,
        4.482888970984637e-17,
        -1.6733928863076836e-17,
        2.963238443090278e-17,
        -1.4860404492768884e-16,
        -4.678763233739191e-17,
        1.482879544631081e-18,
        1.1058660523734805e-16,
        2.736033197917227e-17,
        -5.74370926443562e-17,
        2.2370855228857778e-17,
        -2.723390657458453e-17,
        5.517779776741336e-17,
        3.35999684835068e-17,
        -1.658410289890607e-17,
        -6.022043330632447e-17,
        -6.481677429393219e-17,
        -3.8158620604799376e-17,
        -1.6134015048526228e-17,
        -1.1663922563872302e-17,
        -3.1103258575342505e-17,
        6.802276439194007e-17,
        3.10725707966259e-18,
        -5.703783146342499e-17,
        1.03618596019446e-17,
        1.0313399073536542e-18,
        7.46511070745794e-17,
        3.405458543035894e-17,
        -4.055984726871865e-18,
        2.977803163655669e-17,
        4.043780397475261e-18,
        8.56149682854137e-17,
        8.578371101941693e-19,
        -1.1129652064726156e-17,
        -2.172611265218309e-17,
        7.307575839117971e-17,
        1.210679614701342e-16,
        -4.6560536935993136e-17,
        7.161875588404547e-18,
        2.9376011471850736e-17,
        5.149404466161444e-17,
        3.705070977930272e-17,
        -5.097392002570546e-17,
        -1.2076917529423438e-18,
        7.493662832800762e-17,
        1.567865791964274e-17,
        1.001669163202278e-17,
        -6.49998802164832e-17,
    ],
    &[
        -2.4038677371466442e-08,
        3.232994202115961e-13,
        3.04754337900755e-08,
        -1.1843692436947715e-14,
        -7.496524912246416e-09,
        -9.602220014408784e-15,
        1.4290775452676919e-09,
        -1.4961724219656086e-15,
        -6.217355665879678e-11,
        1.8586447102103806e-15,
        -1.6345376209760386e-11,
        3.7003857181131447e-16,
        2.499222586280528e-13,
        4.898741211779709e-16,
        1.695318462988801e-12,
        -6.69985743739396e-16,
        -6.805836506108249e-13,
        6.818389931694232e-16,
        1.5713001419998656e-13,
        1.3017952708433353e-15,
        -2.094748116364274e-14,
        1.849237603302493e-15,
        9.690520598918843e-16,
        9.068255496743543e-16,
        2.0064836558859919e-16,
        8.681343252732184e-17,
        -7.356793441645657e-16,
        5.200781119171951e-16,
        -4.445287226048885e-16,
        2.3386043472318234e-15,
        7.486211531413881e-16,
        -3.337755191380136e-17,
        -1.7440209878084936e-15,
        -4.3459021722448223e-16,
        8.951308896529212e-16,
        -3.434833495608836e-16,
        4.218294042374857e-16,
        -8.662915673282679e-16,
        -5.35168100856901e-16,
        2.599298068733125e-16,
        9.503047015789818e-16,
        1.0230068759676618e-15,
        6.069673362587115e-16,
        2.576249655229027e-16,
        1.8670558574636473e-16,
        4.853874861088575e-16,
        -1.06801505110485e-15,
        -4.769234809068447e-17,
        8.982209468981698e-16,
        -1.5923472213657184e-16,
        -2.7550819450142464e-17,
        -1.1789543789098603e-15,
        -5.428492162355019e-16,
        5.74606222535008e-17,
        -4.673470490712932e-16,
        -7.400217595105888e-17,
        -1.3441246025904194e-15,
        -2.1510105881020095e-17,
        1.7981432820193535e-16,
        3.3306103792620645e-16,
        -1.1566336660315553e-15,
        -1.9076119414409916e-15,
        7.187824349102873e-16,
        -1.1091724874968983e-16,
        -4.701444919443916e-16,
        -8.126526953607395e-16,
        -5.807181771344976e-16,
        7.9824439238702075e-16,
        1.7771749822584787e-17,
        -1.1812318344468704e-15,
        -2.5777447508278206e-16,
        -1.5043285260486554e-16,
        1.0177314932235501e-15,
    ],
];
