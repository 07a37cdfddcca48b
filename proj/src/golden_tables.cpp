#include "siegel/golden.hpp"

namespace siegel {

// Reference values for every odd prime q <= 1000, independently computed
// at 38-digit precision; 20 significant digits retained here.
static const GoldenRow kGoldenRows[167] = {
    {3, 0.60459978807807261686, 0.55033044351893460168, 0.14200583483179050854, 1.60531281426088943415, 2.27009444749574814599, 0.87074071872621259992},
    {5, 0.43040894096400403888, 0.26742811116774127267, 0.08991180821523694362, 1.44948863673327054404, 1.52484940046373303805, 0.94413465252644938604},
    {7, 1.18741041172372594878, 0.61020824229740594980, 0.27643263791057252254, 1.40549371558030080078, 0.80194548881209684904, 0.85794172560085927694},
    {11, 0.94722582509948293642, 0.39502385106004226257, 0.20871522398737687604, 1.37578983698684533502, 0.51685528737616402827, 0.91295899101389699960},
    {13, 0.66273539107184558971, 0.25838147218927451454, 0.13342609230270605368, 1.36949704631674633504, 0.56701677740432957764, 0.94798100324493175725},
    {17, 1.01608483384284075219, 0.35863336447093897006, 0.19807955817090268479, 1.36252236893620521850, 0.44802975356757556720, 0.93008660693115370704},
    {19, 0.72073078414566794539, 0.24477694706707900762, 0.14540188635350380661, 1.36046423241498071674, 0.32298674064855080025, 0.95061813561690229668},
    {23, 1.96520205410785916590, 0.62675990410829234931, 0.38332891209897371249, 1.35776141486577218049, 0.27728327997964533856, 0.87774529764668030376},
    {29, 0.61176628956230686982, 0.18167880710521482528, 0.11036384645272590779, 1.35554642561250613691, 0.29063403062083574784, 0.96722478450811694068},
    {31, 1.69274009217927609028, 0.49293721594779985979, 0.31284088835300889574, 1.35507464784761415630, 0.22060562381678128245, 0.90889864471701991373},
    {37, 0.81929216872543187792, 0.22689304729319524630, 0.14218522406678805450, 1.35410022350787716690, 0.24165664069777158523, 0.96062352357307734724},
    {41, 1.29909306157509892164, 0.34982303782999099771, 0.22172721913089549226, 1.35368825401096606619, 0.22402980514835986080, 0.94029273832628963934},
    {43, 0.47908838823985721176, 0.12737646854812820283, 0.08340461723967329728, 1.35352908070133037244, 0.17368215488406234444, 0.97782499875726672158},
    {47, 2.29124192852861593669, 0.59510495844651555500, 0.39246561154912285570, 1.35327945785782956839, 0.16304437010137342127, 0.89806478812012098670},
    {53, 0.54002494510255821476, 0.13601643326508233304, 0.08836419232508230269, 1.35302803290054631125, 0.18624290576986660697, 0.97774365355266156020},
    {59, 1.22700157894863547525, 0.30091730507159657222, 0.20168424763644029217, 1.35287356312845265771, 0.13914829082434390134, 0.95053773253808441987},
    {61, 0.93831019824883536614, 0.22825078784983049459, 0.15000740241772657957, 1.35283715648703579283, 0.16875967254290138130, 0.96350960711174903029},
    {67, 0.38380662888291551638, 0.09128054381737623086, 0.06166206157984507066, 1.35276058597980783655, 0.12757499604056836693, 0.98533494189433124631},
    {71, 2.60986917715784586434, 0.61226018665265819509, 0.41497897426385014935, 1.35273045601505508280, 0.12267004527244762442, 0.90264833714140339974},
    {73, 1.79463648373514640544, 0.41828538606457288375, 0.27851003221912283015, 1.35272021503884114050, 0.14914807577906107908, 0.93508619856698228187},
    {79, 1.76728394209597891666, 0.40446390522732929947, 0.27572673371042579858, 1.35270458240959514828, 0.11419672158984247292, 0.93689666451683397168},
    {83, 1.03450377843099381393, 0.23411203757965752099, 0.15999893982344563455, 1.35270405753963782554, 0.11050587271361023816, 0.96379164717072082978},
    {89, 1.46444140226401940465, 0.32625529930182564596, 0.21996363430833003744, 1.35271409234213129784, 0.13050971566471038628, 0.95099544356241617187},
    {97, 1.89349532374748011332, 0.41390490735809004215, 0.28042247994052598910, 1.35274181188616268654, 0.12326292013772485509, 0.93870159639412537643},
    {101, 0.59666866801751914350, 0.12928560930103269329, 0.08778331638358404990, 1.35275999626165793191, 0.12002110414809822468, 0.98097919305395174293},
    {103, 1.54775161082393862005, 0.33394651871870195182, 0.23052004591656898579, 1.35276990437852579440, 0.09589594761234884346, 0.95026245407185662479},
    {107, 0.91112767558291391313, 0.19498417508113876678, 0.13481177406708121097, 1.35279105760962685026, 0.09355275345925109844, 0.97114985828865582787},
    {109, 1.06597159422690850687, 0.22722075211365497770, 0.15489115093387282650, 1.35280220227926316358, 0.11416831697694400180, 0.96698365697402200464},
    {113, 1.38235170906160842756, 0.29241343466467224273, 0.19968947811670376211, 1.35282541291606598287, 0.11151530960201366974, 0.95775902342382907057},
    {127, 1.39385634554837260497, 0.28773792602782610679, 0.20027727799660294114, 1.35291296473365380482, 0.08378484195766069264, 0.95865616368194021096},
    {131, 1.37241112290895862735, 0.28150883583268095963, 0.19616218935426226200, 1.35293899675470203652, 0.08214304815603021596, 0.95976323082950450377},
    {137, 1.39381341332016437677, 0.28329650751350412613, 0.19518122056243286339, 1.35297838607412964315, 0.09847532805450864286, 0.96032886641128995652},
    {139, 0.79939923310163592599, 0.16200292957965930315, 0.11312295508165454357, 1.35299155829969711774, 0.07910442489595189351, 0.97707497159481733322},
    {149, 0.67359583330192465588, 0.13461292190557461195, 0.09306782093014857491, 1.35305731750500008284, 0.09333866082791299003, 0.98140111519190970030},
    {151, 1.78961429055614439182, 0.35669014859897260709, 0.24975870798530923793, 1.35307039776105200217, 0.07506859077004280622, 0.95022029543724605884},
    {157, 0.85575891033757795011, 0.16924788534457484666, 0.11725625491767883858, 1.35310939233420632015, 0.09029237299931346840, 0.97680962132148529063},
    {163, 0.24606852755296024389, 0.04830792988513398745, 0.03390760178246081580, 1.35314792909217273090, 0.07154527672817944797, 0.99334329316402472279},
    {167, 2.67414112075698568624, 0.52249791984297772527, 0.36701536801942904653, 1.35317332141301258971, 0.07046711812116448849, 0.92828921224386521210},
    {173, 0.39091084118993365939, 0.07585653441526830736, 0.05274618389086421808, 1.35321091223368340488, 0.08493169486413290901, 0.98976456446842987752},
    {179, 1.17406829821234371721, 0.22633140124075549858, 0.15930666755510101877, 1.35324786293024902366, 0.06747987379471857938, 0.96928960491511367339},
    {181, 1.06647233219024291485, 0.20515012815743757396, 0.14288037417839760684, 1.35326003133792057582, 0.08255737421626130887, 0.97251506092644502995},
    {191, 2.95512966360404799352, 0.56263819926509207734, 0.39674566402855702698, 1.35331972084050707793, 0.06481348205845241569, 0.92446210779698297446},
    {193, 2.17043401934037005992, 0.41241911293129269104, 0.28787273239944098485, 1.35333142439847546151, 0.07931247172099445145, 0.94529931991695971562},
    {197, 0.47500088853260044973, 0.08990773646468201719, 0.06279962543820142560, 1.35335459463309306442, 0.07830579883782960092, 0.98811334397411123077},
    {199, 2.00431438732986139006, 0.37865085304891402689, 0.26730423244648594619, 1.35336606106221824264, 0.06318783927574056066, 0.94950144733816672243},
    {211, 0.64882847253825363656, 0.12123424357604100845, 0.08571553802523036784, 1.35343320063344513445, 0.06094564326246216244, 0.98398396671072490272},
    {223, 1.47263623115067414101, 0.27234870527388714480, 0.19282612999037137270, 1.35349753210383306421, 0.05890806503949326757, 0.96433881923112980490},
    {227, 1.04257413986938056150, 0.19218133559014944790, 0.13612623873079037965, 1.35351836565596155042, 0.05826923225318402691, 0.97490737457633045641},
    {229, 1.07546851605294369728, 0.19792483225116621922, 0.13890737200427872534, 1.35352867011805046692, 0.07134050273671778391, 0.97443605471288035393},
    {233, 1.40761515138248090751, 0.25822880601066285047, 0.18132345932223975371, 1.35354905701723639571, 0.07058440577838804781, 0.96673597868244165217},
    {239, 3.04819103378239805449, 0.55659843343745476824, 0.39473946660735538723, 1.35357909051582260329, 0.05646089920504149769, 0.92792073518536729448},
    {241, 2.41835638390008713223, 0.44091994894713225232, 0.30991232712144637333, 1.35358895812024356838, 0.06913582679722596790, 0.94349611646894449198},
    {251, 1.38806898983133714208, 0.25121361182915890473, 0.17836357796159308676, 1.35363724585979693559, 0.05479834788710899596, 0.96771964580525059897},
    {257, 1.29748495883097760616, 0.23381999795655663869, 0.16464652429323954028, 1.35366539993686259322, 0.06646781550907920780, 0.97032902022349032694},
    {263, 2.51834572398050237072, 0.45195192190267889927, 0.32122667293444028461, 1.35369296016889736324, 0.05326343536964672312, 0.94235143697043577820},
    {269, 0.62189322157495099927, 0.11115733759606550144, 0.07837017435385113565, 1.35371994301608376598, 0.06464282716452377542, 0.98599209699367395519},
    {271, 2.09921979227515633845, 0.37471889822313975596, 0.26650803193754201335, 1.35372881182136547397, 0.05230347733289799644, 0.95242727966707206534},
    {277, 0.94551517859218221604, 0.16812095224667437033, 0.11862433904786765068, 1.35375505021834899060, 0.06350007293840636272, 0.97890754448801742017},
    {281, 1.73837686726620650326, 0.30831279144623607124, 0.21762415202873450876, 1.35377224174122466851, 0.06294914957533875233, 0.96140289769063960078},
    {283, 0.56024489726455251491, 0.09923836100529680835, 0.07064588483174984608, 1.35378074904363092690, 0.05094878674805416513, 0.98748621922894326509},
    {293, 0.33143839429193379380, 0.05835005678626515758, 0.04123112060951874748, 1.35382242403322780813, 0.06137211649047258609, 0.99274122047909849711},
    {307, 0.53790048971882632435, 0.09392610270553316042, 0.06697598261933001858, 1.35387845858578453571, 0.04850638195293471844, 0.98830491300427046313},
    {311, 3.38472414241331604469, 0.58969447054985015578, 0.42060229691593070488, 1.35389399608837588049, 0.04812989886842535723, 0.92672169478040626367},
    {313, 2.18765235235254611623, 0.38071266883740373676, 0.26946022305108387068, 1.35390168872018058181, 0.05896980870015960658, 0.95310638797202816364},
    {317, 0.50422804930237370784, 0.08755628574697731273, 0.06198952918805163974, 1.35391692427449962776, 0.05851977098360236817, 0.98923587662681801345},
    {331, 0.51803264722850692708, 0.08928336406008632715, 0.06375879775394483775, 1.35396872821695014793, 0.04636137845546200668, 0.98901111738351919822},
    {337, 2.33496354618023864501, 0.40119076894989782797, 0.28445298649725928204, 1.35399023422861369381, 0.05640370780779139758, 0.95112561283039349772},
    {347, 0.84324765016103968640, 0.14416153690968422288, 0.10303919169388233892, 1.35402519507511206504, 0.04506901888157027469, 0.98238442972988440478},
    {349, 1.05143274302898396424, 0.17957640093915020960, 0.12742571629132863783, 1.35403205874034062285, 0.05523136284868475601, 0.97823669495704562692},
    {353, 1.26326462707244921597, 0.21533648778321692919, 0.15284004549288177497, 1.35404566089891669524, 0.05485530539427773666, 0.97394683751627225384},
    {359, 3.15033145392974552469, 0.53546809878953853528, 0.38296184256303134496, 1.35406575725457480815, 0.04416257590215822297, 0.93490721444869971096},
    {367, 1.47590821481251243553, 0.24992680428189637024, 0.17881578118762586811, 1.35409199598600849378, 0.04358556145315234400, 0.96971975879064312552},
    {373, 0.95620222669031687010, 0.16147759244702068455, 0.11475204098897685117, 1.35411127094265687404, 0.05307583488435248998, 0.98062137611682946929},
    {379, 0.48411832547443343593, 0.08153522079748106318, 0.05836918685407896260, 1.35413021042820747073, 0.04275786000725053118, 0.99016946005245139097},
    {383, 2.72897405712794362791, 0.45880262340283667315, 0.32850595031568327195, 1.35414265504853999390, 0.04249147885966666124, 0.94477067621269396065},
    {389, 0.79595304655678003747, 0.13346901260038062705, 0.09493336788720439026, 1.35416105619981949696, 0.05176201985666864596, 0.98408114281420747217},
    {397, 0.81759772693728272404, 0.13663209108292684910, 0.09722467765085002936, 1.35418510867177370227, 0.05113804985383631445, 0.98375238754385853422},
    {401, 1.84245030922576326425, 0.30738441205713295880, 0.21877415795894336801, 1.35419693385708307854, 0.05083378332121723922, 0.96350090660205480320},
    {409, 2.58450736883986784592, 0.42976883702961221355, 0.30600285829649572809, 1.35422019428835176059, 0.05024001050227069348, 0.94911583765502880144},
    {419, 1.38129159965066196073, 0.22877130332366804116, 0.16404869772887678440, 1.35424856267586232283, 0.04028431988171994174, 0.97283004226082522827},
    {421, 1.26771733328139755787, 0.20979552591959329948, 0.14946549585491626113, 1.35425414487149731846, 0.04938436527159565703, 0.97526483902484077226},
    {431, 3.17782906126902242265, 0.52386621109724941649, 0.37582820384698174496, 1.35428161319598569452, 0.03961646506144404360, 0.93804459164515909435},
    {433, 2.24855924140863418396, 0.37039307941713669135, 0.26402806197577231845, 1.35428702014259397731, 0.04856795158054284160, 0.95650807631535617704},
    {439, 2.24910054927309989676, 0.36964430375980270234, 0.26526493823556995421, 1.35430307207152657818, 0.03918792684646118666, 0.95640316150486697055},
    {443, 0.74630785716666530102, 0.12247465530556111599, 0.08790307416796546949, 1.35431363503286562166, 0.03897842516898990112, 0.98557445348372299620},
    {449, 1.86439354511048221777, 0.30528681149248847923, 0.21777193191285979942, 1.35432927673113316805, 0.04753554951583818809, 0.96434073755479744957},
    {457, 2.38525593186943368168, 0.38944967105004687527, 0.27790212589447049403, 1.35434976349460983667, 0.04704171487765358980, 0.95462587889724423098},
    {461, 0.54957192848180195934, 0.08960317341694861572, 0.06394928299061061816, 1.35435985279916674685, 0.04680008561804179954, 0.98957359647257357008},
    {463, 1.02201534654906780970, 0.16651365196643178377, 0.11959262198183381426, 1.35436485968688543723, 0.03797564767087865659, 0.98051516124324652035},
    {467, 1.01762899434701362464, 0.16556695088817405610, 0.11892824535424547236, 1.35437479898402282743, 0.03778355999124213694, 0.98065052483059602863},
    {479, 3.58857580472017716180, 0.58145656097212776090, 0.41782496695151772864, 1.35440403571820347686, 0.03722309756317605641, 0.93229986446089119777},
    {487, 0.99651406339751772517, 0.16103289122396401185, 0.11574399152071413545, 1.35442305829226240461, 0.03686204522125124301, 0.98129621017807203356},
    {491, 1.27600282553383958283, 0.20592501105759230932, 0.14802847452958968898, 1.35443243353832925209, 0.03668513159221982500, 0.97611073843696917771},
    {499, 0.42191100603520136968, 0.06791208062003553977, 0.04882988813572055338, 1.35445091917610656679, 0.03633827188812157807, 0.99214019247588982038},
    {503, 2.94161055306196188762, 0.47288287326840516245, 0.34004980840133510986, 1.35446003236494670358, 0.03616822733487120387, 0.94533479957643908790},
    {509, 0.60545067376348094520, 0.09714492157105550040, 0.06945769832238238121, 1.35447354392782473163, 0.04414639190945388174, 0.98885547089395136569},
    {521, 1.69667214053319208099, 0.27121802009494090607, 0.19399791000115208837, 1.35450001358879804956, 0.04354607924452285284, 0.96898886485132353691},
    {523, 0.68686127642631349436, 0.10972958501609965330, 0.07895041919659370235, 1.35450435529392795671, 0.03535001321630170097, 0.98738726867765310271},
    {541, 1.21666267245791056249, 0.19332299637930880256, 0.13837084284897416421, 1.35454256786249600342, 0.04259423060531816795, 0.97801340786016467275},
    {547, 0.40297440642054359518, 0.06391905447241206028, 0.04601843413060230529, 1.35455497140447127621, 0.03443306523769305016, 0.99270064115471547721},
    {557, 0.46302148873976553639, 0.07323316900168368336, 0.05244244256092793828, 1.35457528831888197854, 0.04187318786719491501, 0.99170551183406514282},
    {563, 1.19162110015637966561, 0.18815229551239650389, 0.13551299779577685311, 1.35458727076482901904, 0.03385736977031018334, 0.97860302943301718019},
    {569, 1.88476684215394745733, 0.29709999451045999039, 0.21282946206966013679, 1.35459910155248485596, 0.04135422004740572241, 0.96645121794465682260},
    {571, 0.65735780364210046723, 0.10356349389164450671, 0.07460366348169564142, 1.35460301201156021611, 0.03357940502288334637, 0.98824655917298969209},
    {577, 2.25649569369048617219, 0.35491533119298588274, 0.25430425328575003191, 1.35461464563153277280, 0.04101805263161343844, 0.96000148436752255790},
    {587, 0.90767184035159689867, 0.14237934219934102363, 0.10260274493976198215, 1.35463371601799856365, 0.03304204531696241530, 0.98390551443491812454},
    {593, 1.14973060344194813822, 0.18006195764727533672, 0.12907547257718210897, 1.35464497175843319268, 0.04036799276590968032, 0.97978519297745376467},
    {599, 3.20904989883664076353, 0.50178555632224349672, 0.36169664744149677984, 1.35465609117902202183, 0.03265440747138537032, 0.94344302545058027601},
    {601, 2.71357102171217499608, 0.42408857717593404003, 0.30406863164646020543, 1.35465976784663745689, 0.04005357328162699404, 0.95247884344025167162},
    {607, 1.65767305982970466703, 0.25866671023500976377, 0.18648376288401031238, 1.35467070985905401855, 0.03240292183238713396, 0.97090069047607732686},
    {613, 0.92899988878750402864, 0.14474089554896833741, 0.10381078904398923563, 1.35468152197615147700, 0.03959451505151431097, 0.98382597591751816930},
    {617, 1.46721777647419322522, 0.22836539873653918938, 0.16380455424354878123, 1.35468865918922608328, 0.03944473222429774966, 0.97450460801082924052},
    {619, 0.63135634954328056445, 0.09821810981007854740, 0.07082724345232840177, 1.35469220682238232404, 0.03203562589619692571, 0.98898162981970758420},
    {631, 1.62584277488920558388, 0.25217397926401117719, 0.18189214322680485918, 1.35471320483555636308, 0.03167971346422158052, 0.97178788363623377751},
    {641, 1.97514059108196598356, 0.30560600168191523306, 0.21933836479866029927, 1.35473033619057541217, 0.03857813477593126179, 0.96606260790537001087},
    {643, 0.37167696054672361507, 0.05748045804689990168, 0.04147014706579212793, 1.35473372347150569529, 0.03133461999753278949, 0.99358657301462091844},
    {647, 2.84070128925957940909, 0.43889822330321299109, 0.31667398461510986618, 1.35474045971790388657, 0.03122190102561039225, 0.95107276863659696692},
    {653, 0.58035647957020970787, 0.08953939265010298985, 0.06428203036255914768, 1.35475046953239467792, 0.03816434888713844033, 0.99008234738545258149},
    {659, 1.34616982230635910037, 0.20739903882064491981, 0.14967626811126803621, 1.35476036781470475868, 0.03089041996727199247, 0.97693997174342132355},
    {661, 1.11999325199804251383, 0.17247239110369827858, 0.12384395547829596586, 1.35476364282570692151, 0.03789529186024628706, 0.98092875730547795253},
    {673, 2.48337613840124770910, 0.38136874412082350586, 0.27391581174681826550, 1.35478304188845849460, 0.03750147680637506693, 0.95793511602798465873},
    {677, 0.30374567568477932175, 0.04660340526027440933, 0.03347555849498589539, 1.35478941441495095188, 0.03737272881724802515, 0.99486387743516433990},
    {683, 0.60104851043764983729, 0.09209361584897920724, 0.06649095327648296169, 1.35479888724152173116, 0.03025594068424354252, 0.98981214959834417331},
    {691, 0.59755908466288596373, 0.09139588640955929171, 0.06599630106943590398, 1.35481136016874090170, 0.03005241141445773599, 0.98990595140998302159},
    {701, 0.76048659630628182151, 0.11606038625471207803, 0.08340954458956226259, 1.35482670433578210082, 0.03662539896746132327, 0.98727059226367292868},
    {709, 1.30788527015954699221, 0.19925564553833806973, 0.14322324277539521284, 1.35483878722270831350, 0.03638544200950989301, 0.97818001292129838421},
    {719, 3.63201071708524524489, 0.55215677551823390162, 0.39889300573477128647, 1.35485365694129056644, 0.02936909848443259670, 0.93935825277518907800},
    {727, 1.51469788698487771379, 0.22988538302098122046, 0.16609650404220700767, 1.35486537037338342442, 0.02918171927857417683, 0.97479156815475908654},
    {733, 0.73071044851973008699, 0.11076160532740114243, 0.07965221882043248666, 1.35487405156457705708, 0.03569117019153599530, 0.98792626047388137145},
    {739, 0.57782676937727361509, 0.08747928954797630044, 0.06321719581284105574, 1.35488264543316543449, 0.02890681917650937155, 0.99042931952965323333},
    {743, 2.42033098436211130745, 0.36612347141509609398, 0.26459645812028807150, 1.35488832691210862580, 0.02881678394259856258, 0.95997449340728463277},
    {751, 1.71957516129605273827, 0.25969941304500925429, 0.18770665974100441980, 1.35489957719472852988, 0.02863904313626900627, 0.97165153902162844911},
    {757, 1.07750048093693843269, 0.16253453608508091490, 0.11693630993036847128, 1.35490791799401157279, 0.03503277862848840545, 0.98236085345455541170},
    {761, 1.60466139385922576087, 0.24186135198530417594, 0.17402103422815112884, 1.35491343315962672207, 0.03492632418953755422, 0.97377081372221638945},
    {769, 2.74259278564652916003, 0.41272464112715707084, 0.29700102405169899696, 1.35492435643738726104, 0.03471610842280814580, 0.95530519816588844357},
    {773, 0.35496510586623235281, 0.05337597163560077649, 0.03841263399093716531, 1.35492976534440364969, 0.03461232250601469780, 0.99422390643906944803},
    {787, 0.55992841939873066257, 0.08396959410194464642, 0.06072326916134757729, 1.35494842626122993014, 0.02787557616244300825, 0.99089364267401025617},
    {797, 0.41835782349411989520, 0.06262040466503263606, 0.04508409479401042827, 1.35496150462001991354, 0.03400737567237013774, 0.99325174742430195132},
    {809, 1.93293173914226876225, 0.28867828366497874651, 0.20787771960393117173, 1.35497693157006976121, 0.03371582595582892482, 0.96895400800129565192},
    {811, 0.77221367037683702464, 0.11528557294782929567, 0.08339664177565978132, 1.35497947500667002529, 0.02739720699393118373, 0.98754952159246285737},
    {821, 0.67651235685636589623, 0.10081365428925087305, 0.07261017392591420386, 1.35499207589280056863, 0.03343118270059318275, 0.98917965518610081661},
    {823, 0.98558132212062919454, 0.14681777932965260644, 0.10622335026008855922, 1.35499457309647581098, 0.02716649572848899616, 0.98417636774549864402},
    {827, 0.76470716246213692316, 0.11383289589061803950, 0.08236284756934693961, 1.35499954485148919285, 0.02709079381454957239, 0.98773961862416774605},
    {829, 1.19815159165959413711, 0.17829052679829539376, 0.12842852029139896932, 1.35500201948179621086, 0.03324512681998789564, 0.98088923914296772329},
    {839, 3.57917416660357193379, 0.53164915993572322425, 0.38472848193364481224, 1.35501428171472255976, 0.02686718768846612490, 0.94285257863898100280},
    {853, 0.69994286174949083151, 0.10371429843127831870, 0.07473638132162035954, 1.35503114514538460618, 0.03270393912307176912, 0.98892590841388063163},
    {857, 1.13428247579320960158, 0.16795630454669542980, 0.12103632716842654726, 1.35503589973501215812, 0.03261612570176427643, 0.98207782041867686411},
    {859, 0.75032830660913181702, 0.11106482700547295177, 0.08039181237006652880, 1.35503826661981379802, 0.02650574552671867219, 0.98810027203440013018},
    {863, 2.24576220996019348804, 0.33219296634601661470, 0.24046199206497726227, 1.35504297974445551695, 0.02643508044000786574, 0.96443088138037865171},
    {877, 0.88383663619181803411, 0.13042658071284927743, 0.09401834734667991368, 1.35505926250729193789, 0.03218678460645850450, 0.98612583924837538390},
    {881, 1.75750576898034081030, 0.25917871015551250574, 0.18684035396996865892, 1.35506385492579003853, 0.03210280713893170195, 0.97244672375952949576},
    {883, 0.31716903119407663757, 0.04675716139421373779, 0.03385365085992796650, 1.35506614133270666050, 0.02608951563543007725, 0.99500928381600903145},
    {887, 3.05904637329967833761, 0.45066532622240747506, 0.32631072248613567032, 1.35507069470268753185, 0.02602191172110351678, 0.95192719878892877801},
    {907, 0.31294461576390249253, 0.04595272684180220806, 0.03328016569948733107, 1.35509308082340970970, 0.02569111528743156599, 0.99511314690650491820},
    {911, 3.22665385387042988763, 0.47349527364011849896, 0.34293264020841757477, 1.35509748361184231270, 0.02562636160846504475, 0.94967635461707835743},
    {919, 1.96900000823240599231, 0.28857063487066901495, 0.20901760697482178406, 1.35510621664801272634, 0.02549821685997481607, 0.96936701711950779765},
    {929, 1.69391020650614908554, 0.24786117272113414772, 0.17879874892404850467, 1.35511699928640912613, 0.03114087003695233544, 0.97383729821145899796},
    {937, 2.25537551795571516602, 0.32960396162277473481, 0.23778996803766798800, 1.35512552064462352496, 0.03098830216628082727, 0.96524901734749286578},
    {941, 0.45862903621215601114, 0.06698303562075857136, 0.04832682491998277619, 1.35512974700391999364, 0.03091280248419242123, 0.99294183930919729627},
    {947, 0.51044022041152226105, 0.07448094902483237890, 0.05396389970694517977, 1.35513604424031454818, 0.02506348598834765208, 0.99212585078030535447},
    {953, 1.45295536414148277191, 0.21181296392709675170, 0.15284176980867364772, 1.35514229133818874919, 0.03068937098973946392, 0.97771860782924520480},
    {967, 1.11129489882427547420, 0.16166174130108460363, 0.11715280323329332387, 1.35515667676797795161, 0.02476541505903528806, 0.98295760541235751687},
    {971, 1.51227759095209977084, 0.21986126973234104798, 0.15933503304962222559, 1.35516073863466659129, 0.02470698740314042627, 0.97683520347803390374},
    {977, 1.49820818462619078840, 0.21762090048960129350, 0.15707907427329480398, 1.35516679194687294594, 0.03025581444672276531, 0.97718361844355005125},
    {983, 2.70543359074492325719, 0.39262618784087143443, 0.28457219167277347527, 1.35517279844033022223, 0.02453400120490038280, 0.95870144616958105591},
    {991, 1.69653165274144151606, 0.24591996730680940513, 0.17825437671761626813, 1.35518073535005806431, 0.02442055038098664765, 0.97416121861100771551},
    {997, 0.76277626026681664927, 0.11047122273915650913, 0.07975720056598333162, 1.35518663501537123042, 0.02990739982056048090, 0.98844893853186475847},
};

const GoldenTable& golden_table() {
    static const GoldenTable table{{kGoldenRows, kGoldenRows + 167}};
    return table;
}

}  // namespace siegel
