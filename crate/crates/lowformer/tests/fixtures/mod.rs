// Reference values computed offline with an autograd framework.
#![allow(clippy::excessive_precision)]

pub const CONV_X: &[f64] = &[6.62675396644994280e-02, 4.69915552439240866e-02, 1.83653863002940154e+00, 1.36769039853677810e+00, 1.12135866387841676e+00, 1.85974719600337601e+00, 6.01229002780523714e-01, 7.37829575410141714e-01, -8.06781543636796328e-01, -7.98347503246621293e-01, 7.67773904849359590e-01, 5.17355516784497094e-01, 1.96424729745847371e+00, 4.48138984898057868e-01, 5.80363756973686584e-01, -1.04921461215979650e+00, 1.28772065659476437e-01, -2.91041470959389148e-01, 4.58016953587029929e-01, 1.69327497640735669e+00, 1.45745493793272596e+00, 1.93221486001029308e+00, -1.44181399275229238e+00, 7.27760347871697633e-01, -1.00015747241211150e-01, -2.42925190670234992e+00, -1.52131623493670348e-01, -2.69091710617718638e+00, 1.74210503116206361e+00, -5.23961020712386039e-01, -2.83878990219479155e-01, 4.52575502101029536e-01];
pub const CONV_W: &[f64] = &[-1.26914477481832044e+00, 1.28464345282766312e+00, -5.58236488844430445e-01, -3.36695641075675678e-01, 1.11989070267832350e-01, 1.59632835498581760e-01, 5.75208101639444469e-01, -5.66630409505192834e-01, 6.73824647234836038e-01, -9.37172865330128446e-01, 7.28059044268922984e-01, 4.46567112486456683e-02, 6.39632866538433764e-01, 3.17215057596831773e-01, -1.52904642224972864e+00, 7.31957798430088458e-01, 1.23498284120374335e+00, 9.76004977022603915e-01, 1.34331982095047486e-01, -8.16469177121765394e-02, 2.08594546494980493e-01, -1.71962241286033835e+00, 5.38946724815901779e-01, -2.21938642554894416e+00, -3.73216466967339844e-01, -1.54412642474533235e+00, -1.62841880391020377e-01, -9.69268998361496825e-01, -6.54110262153517641e-01, -1.37891373664668904e+00, -1.42456522459232882e+00, -4.27569531098095701e-01, -3.22597643399446410e-01, 2.54630688118589799e-01, -2.54291475150131840e-01, 1.08851455407383546e+00, -5.35348972561711767e-01, -8.10038503076090821e-01, -7.82966872629431210e-01, -1.15912560854447522e+00, 6.24961640286438372e-02, 6.21016325674585867e-01, -6.15960527574844097e-01, 6.28544488518565703e-01, 3.68837001308230217e-01, -1.85738380684019239e-01, 5.60087154320467073e-01, 1.30307857161266116e+00, -6.02830236131998931e-01, -3.82798075900015300e-01, 7.61700386888176095e-01, 5.64309057933385483e-01, -6.88885855844458272e-01, 9.52754523460942693e-01];
pub const CONV_Y: &[f64] = &[4.80431773308481613e+00, -6.51570475493379875e-01, 5.84373227622665325e+00, -2.94848622565655871e+00, -3.31486109803270312e-01, -2.54570929636678223e+00, -5.27721583906247282e+00, 2.99243940746402703e+00, 1.99001763270891230e+00, 4.48105010236909607e+00, -1.68802913291188461e+00, -1.47794680224603825e+00];
pub const CONV_CT: &[f64] = &[-1.07646322539388306e+00, -2.10979997198606073e+00, -8.00749034229561896e-01, -9.47141650759340641e-03, 8.70284052427021226e-01, -8.79723029247929444e-01, -1.04588365401367245e+00, -1.10580181967201230e+00, -1.47461491251063315e+00, -2.75272518013161202e-02, 1.10888133410463885e+00, -1.13024323594028631e+00];
pub const CONV_GX: &[f64] = &[2.56326848474331848e-01, -7.64035989250958281e-01, -7.12118730315945858e-01, 1.59855712472311562e+00, -3.50225328362310062e+00, -2.45007494622310507e+00, 3.53023675153966288e+00, -6.28966465599702040e-01, -5.84049879985884979e-01, 6.09687201388467237e+00, -6.67664830802089493e-01, 1.75079009735189950e+00, 2.76568659152068541e+00, 1.14318632414682475e+00, 1.00245644626566310e+00, -2.43186752124966543e-01, -1.49097537060024182e-01, 1.62315600239341273e-01, -2.82580177495259821e-01, 3.48881115656043717e+00, 1.87322773452577973e-01, 8.49923812068083651e-01, -2.27951171253037543e+00, -2.99140669236438450e+00, -2.31299308580646790e-01, 4.65699077427724184e+00, 9.02457625608552028e-01, -4.89695413475876695e-01, -1.48684468704404971e+00, -1.78981316611613228e+00, 1.04810751798245838e+00, -2.28976987993842274e+00];
pub const CONV_GW: &[f64] = &[-1.76144402921769271e-02, -9.03621357427373484e-01, -1.49617906233116948e+00, -9.15813002161664363e-02, -3.30730608420860372e+00, -2.30176194302030090e+00, -3.92793909300833732e+00, -4.05394029066160133e+00, -3.90753159331794597e+00, -1.83008117213187722e-02, -1.15339961313090322e+00, -1.55411210444965420e+00, 6.37047743887144580e-01, -1.02341413400625680e+00, -1.28846814234437401e+00, -4.07162420445985518e+00, 8.07422930892334190e-02, -3.20011225168509705e+00, -2.05651183347045574e+00, -1.83765082215134035e+00, -2.76097247999405537e+00, 8.41474568492465269e-01, -1.56317989620618314e+00, -8.99406807355934590e-01, -2.13161534186967350e+00, -2.24915587675907336e+00, 1.66094484540069320e+00, -2.13664670819668467e+00, 7.00322407687048454e-02, -2.82563065508874178e+00, 2.94230706334233094e+00, -1.80275254424587250e-02, 3.77343415093315837e+00, -1.12041685966515736e+00, 1.02867149121393608e+00, 1.08889169387436135e+00, -2.10196668884172944e+00, 5.63918677567483595e-01, 1.22831206491757872e+00, 9.01033317100574549e-01, -1.91067022064274439e+00, -1.57695342401281224e+00, -5.57699785793352554e-01, -1.47957437165123773e-01, -1.07992069535380852e+00, -2.18387277590994078e+00, 3.24574508876457024e+00, 1.32005078117748598e+00, 2.75365710780109874e+00, -1.41457013152895550e-01, 7.30201649143747078e-01, 5.39014834570794465e-01, 1.43144450667813672e-01, -3.96183708476104757e+00];
pub const DWCONV_X: &[f64] = &[5.96634370084863752e-01, 1.86626063886158944e+00, 9.32842581637089219e-01, 2.20375412902185586e+00, 1.55341615881722150e+00, 4.74969426420466023e-01, 1.89478087034114706e+00, -3.64945642897949785e-01, 1.36909544069198752e+00, 8.61840890890537420e-02, 5.60228439358155694e-01, -4.95866818935779108e-01, -1.96274453560011231e+00, 7.12067602866615301e-01, 1.13776840238392496e+00, -7.96231967210203062e-01, 5.43508289779509823e-01, -1.08639598777285196e+00, 4.21302664025405144e-02, -6.72764782209227086e-01, 6.22449789088776115e-02, -2.58114551777047341e+00, -7.82057039090120032e-01, -5.88276160713701701e-01, -6.87706279768396045e-01, 3.75627926319007155e-01, -9.81554799807735912e-02, 1.06427524213270241e+00, -7.61093802857309987e-01, -1.44570179889074124e+00, -9.62756356354300263e-02, -1.27701566227321517e+00];
pub const DWCONV_W: &[f64] = &[-1.51436223159935102e+00, -9.77046298444769645e-01, 1.39940915268704513e+00, -1.45498621866294520e+00, -9.61295514084736680e-01, 4.37543858863038593e-01, 1.78854177340269227e+00, -8.03980407573371275e-02, -1.64650685629749116e+00, 3.28017311375802367e-01, 1.71660362028375535e+00, 2.30473811259966288e+00, 6.53439910885021402e-01, 3.33591585431449011e-01, -1.71262455821572979e+00, 7.13119253551118049e-01, -1.65970669807414289e-01, 7.74311449226622317e-02];
pub const DWCONV_Y: &[f64] = &[-6.63903094722329667e-01, -1.34983031964451805e+00, -3.14610230701357763e+00, -1.46908820207934232e+00, 1.83170634719488379e+00, -1.30006363814675896e+00, -6.70036022963498112e+00, -6.26882196653706636e+00];
pub const DWCONV_CT: &[f64] = &[-4.43622403417823663e-01, -7.30332244992228929e-01, -4.18037892462326588e-01, -1.54501116993502635e-01, -1.20160598667912125e-02, 2.80198123907750674e-01, 9.72361319304796745e-01, -5.80749958793127186e-01];
pub const DWCONV_GX: &[f64] = &[4.26452226353043251e-01, 8.68519093239332518e-01, 7.02065110902464595e-01, -3.19552388726005943e-01, 4.44108747510822910e-01, -9.26837796363861988e-01, 2.09672026063366795e-01, 9.86286771533764539e-01, 4.01857950741472125e-01, 4.18870833746393667e-02, 1.48521230686935152e-01, -6.76010149279869244e-02, 3.36094275162974465e-02, 4.11970554351118068e-01, 1.24215871010977374e-02, 2.54387148435422927e-01, -4.00845646160208693e-03, 2.03671636337287854e-01, 9.34717363893041442e-02, -4.79874188170387794e-01, 1.67115327444703987e+00, 2.24942641144909983e+00, -1.04342215204767408e+00, -1.31678050238184485e+00, 3.24371554119102568e-01, -2.04477507622070265e+00, -1.93733299493047989e-01, 9.94606641611882725e-01, -1.61383459459838147e-01, -3.38852926882116656e-01, 9.63874596515235660e-02, -4.49681342231407488e-02];
pub const DWCONV_GW: &[f64] = &[-7.33833069197252635e-02, -9.42132578074502347e-01, -1.42170708535206525e-01, -1.37630586015174239e+00, -1.60485508234910901e+00, -2.39680396803626783e+00, -4.56900727518108174e-01, -1.42823467663116954e+00, -1.18828019493990744e-01, 1.49900015308426737e+00, 5.14704203037397723e-01, -2.16816470488349866e+00, -5.22552020326171984e-01, -6.06421201077999683e-01, -4.28284967587949206e-01, 1.16359128520761468e-01, -9.04024957367858928e-01, -7.97936392752575330e-01];
pub const TCONV_X: &[f64] = &[-2.32978954280303929e+00, -2.41756610512424197e-01, 1.16618488091755435e+00, -1.04701405689597338e+00, -1.81566420684012253e+00, -1.18843721290283380e-01, 1.24233222220748085e+00, -9.31646454558384907e-01];
pub const TCONV_W: &[f64] = &[9.81793112120205702e-01, 9.57028607944169218e-01, 1.11157731329328358e+00, -3.06282645450222157e-01, -3.56209486436191991e-02, 7.08704160327133903e-01, -4.41190083410028688e-01, -1.89785412246997320e+00, 6.22697940416290341e-01, -2.22010997542431587e-01, 8.50388265330334625e-02, 1.86391444126987715e+00, 2.25431125755601765e-02, -4.29437768602249026e-01, -9.07352726402306242e-01, -1.90520648137304227e+00, 1.25519135950777616e+00, -1.29039723567190756e+00, -1.51560510762789230e-01, 2.89106742136840345e-01, 4.47303139236641278e-01, -7.11367631379020565e-02, 1.53706633034155837e+00, -4.00529333929177334e-01, 6.55616203485668070e-01, -1.12591863759365207e+00, -5.69314328577724571e-01, 1.57630504385974923e+00, 1.70841884002636779e+00, -1.27374453308972613e+00, -2.36221435845327871e-01, 1.33632960796448069e-01, -9.99387291724402216e-01, 2.65094058897490203e+00, 6.66843673925027303e-01, -1.23767225159571548e+00, -1.21836804957200373e+00, -1.30618931811877809e-01, 1.08956460113867837e-01, 1.82582478869606386e-02, -1.24818251428073457e-01, 1.27694342125199745e+00, -1.00353460746693685e-01, -5.72647689450802244e-01, -1.02798734811135395e+00, -1.30564833193917984e-01, 1.57225699906048266e+00, 7.67590279606062631e-01, -9.80589266348010469e-01, -1.42017136012659112e-01, -7.33671677605871708e-01, 3.65023334199798266e-01, -3.46883694529596387e-01, 6.73443199584898844e-01];
pub const TCONV_Y: &[f64] = &[-1.59643270117551972e-01, 2.65539481390936694e-01, -7.26983854076992779e-03, -5.25630108979955671e-02, 6.44933256517389175e+00, -2.19456438259397180e+00, -2.21409616441320756e+00, 1.93907385906902791e-02, 1.24475921394287120e-01, 1.25666140208640309e-01, -8.72030401883116396e-02, 1.89052409022578805e-01, -1.38480740051925544e+00, -2.81922637706744084e+00, 1.36581739960709481e+00, 5.01099468288414451e-01, 1.22712765405251512e+00, -2.12179395131094406e-01, 1.18653284847956952e-01, 6.76018116154952220e-02, -1.94769690475885060e+00, 9.02192232965652430e+00, -2.02741408257750666e-01, -1.61892161682775737e+00, -6.55869568707604600e-01, 4.87633739304390745e-01, 5.65913861695736653e-01, -2.39648751974976759e-01, 7.52366509538924588e-01, -6.93671640004525525e-01, -7.80697807911117869e-01, 2.30878481292701254e+00, -3.32318563240827425e+00, 2.39898511858454189e+00, -3.54718101225412530e-01, 1.84022886553483672e-01, 5.54339521918197420e+00, 1.65732211906300320e+00, -1.45406325913974888e+00, -1.12585443054612488e+00, 1.61607105123760375e+00, -3.90511514864383513e-01, -1.47702029299639159e+00, 1.10288246007444268e+00, -1.74397408337750259e+00, -8.53797651922835521e-01, 1.50202560463432899e+00, -3.13308644265551592e-02];
pub const TCONV_CT: &[f64] = &[5.43146415934072424e-01, -7.80169686941313383e-03, -7.05835546866197205e-01, -1.02050081416539729e+00, 1.47090985005249042e+00, 2.11812757046522737e+00, 8.40720836004972272e-01, 7.89513002665075403e-01, -4.06164678557870071e-02, -8.40134625188699302e-01, 1.26241202107688433e+00, 1.82372685408771296e+00, -1.52156208252765546e+00, 7.98949683333496918e-01, 2.74903707472690639e+00, -3.45657054788118756e-01, -1.50807291239795349e+00, 6.68788326454685222e-01, 1.29409594089862234e+00, -2.96280105651874071e-01, -1.80115703496322466e+00, 1.24119304871402658e+00, 1.08472999340748899e+00, 6.56712774602845495e-01, -1.29113104722881733e+00, 7.84137339695954783e-01, 3.66008078221161437e-01, 1.41018593642736390e+00, 1.66691626939447413e+00, -2.72644995392814282e-01, 8.33048296659166798e-01, -1.95847483967140079e-01, 2.07620114294002134e+00, -2.16203534258446517e-01, -8.68918219317642015e-02, 2.63879818324026916e+00, -6.64549374627529166e-01, 9.72528817420542757e-01, 9.38224827387028726e-01, -7.05972127156147433e-01, -1.55328771129936594e-01, 1.70485718122621677e+00, -8.40330184633910071e-01, 3.98327072471394317e-01, 1.08467162244671522e+00, 7.60423189826193308e-02, -1.66709250064188952e+00, -1.13197294423131822e+00];
pub const TCONV_GX: &[f64] = &[-1.84671873887482940e+00, -6.04850126944725019e+00, 9.05756191897815022e+00, 1.72801839494686615e+00, -1.33335387372520500e-02, 2.01987376806628216e+00, -2.34776578259861068e+00, 5.43694397927576656e+00];
pub const TCONV_GW: &[f64] = &[-2.21770934057600932e+00, 8.35106295101380902e-01, 1.64349713663869768e+00, 8.81518874048992873e-01, -2.46390587305624331e+00, -2.62433082035863086e+00, -1.34858289127134712e+00, -8.28286336294645054e+00, -3.83203061492667585e+00, -1.29954656932515444e+00, -3.23620965336672084e+00, 7.59873061357926982e-01, -9.82686816152638976e-01, 1.31172314334320639e+00, -2.04854376337833743e+00, -1.46034817300708109e-02, 5.00579545292402450e+00, -3.16338264272558778e+00, -1.01825134257572580e+00, -1.75732201611685768e+00, 1.87331114404170362e+00, -1.73274080012076603e+00, -4.11740958794345069e+00, 1.43688645337583898e+00, -3.14732647419016631e-01, 4.33183505869141516e+00, -8.21243052979917953e-01, -1.97334604132629465e+00, 1.04410411654518898e+00, 1.89587114177433635e+00, 7.83635627597129125e-01, -2.12886821387411462e+00, -2.60734959746427108e+00, -9.96064802489831314e-01, -7.22200900627808817e+00, -2.62504597334461476e+00, -1.15635310325693563e+00, -3.24822027430172788e+00, 9.30149990275433991e-01, -8.10020065885955876e-01, 6.39354999543739311e-01, -1.51871964019664363e+00, 1.06500742561995682e-01, 4.43614031140150544e+00, -2.48789103120943311e+00, -9.06053024705707477e-01, -1.69968493536138787e+00, 1.86592031618894238e+00, -1.56262971585042165e+00, -3.16943685420672239e+00, 1.82584742839163328e+00, -1.86423500600850944e-01, 3.99575970801909364e+00, -5.32817005919967057e-01];
pub const TDWCONV_X: &[f64] = &[-1.51011082699710225e-01, -7.76196013379992333e-01, -6.06187112536392014e-01, 3.55568718899979402e-02, -9.38374055627729908e-01, 1.30370932411812879e+00, 3.49359163882202561e-01, 2.20845826513208471e-01];
pub const TDWCONV_W: &[f64] = &[3.86529208296370497e-01, 9.19067138025112251e-02, -2.42249085870927444e-01, -1.33224891350268271e+00, 5.74028685893623103e-01, 1.81873621012453163e-01, -1.76633473788949030e-01, -7.80784430107669514e-01, -8.68645138746523132e-02, -7.86666529443191265e-01, -6.90438338852257583e-01, -1.22742892363117062e+00, -8.50383257854436136e-01, -1.36092477875505685e-01, -5.03085596284433056e-01, -1.79853975165668967e+00, -1.56672205117786612e+00, -3.14291147794570069e-01];
pub const TDWCONV_Y: &[f64] = &[-8.66846933574879075e-02, 1.00662136306700112e+00, -4.45558777556386121e-01, -1.41169579568849762e-01, 6.21944366829825443e-02, 3.10811745892651203e-01, 6.09309677207248934e-01, 5.88102696619144799e-02, -3.47968791614914952e-01, -1.57620049111080907e-01, 2.04106644455034243e-02, 6.46685704250983453e-03, 4.73301459200340557e-01, 4.63756150485538782e-02, -2.77622519550434557e-02, -3.08863039162796072e-03, 1.27705650404465382e-01, -6.36570111025461127e-01, -1.77425032348636907e-01, -6.55877382705544076e-01, 1.22896036443152834e+00, -2.65239594739782181e+00, -2.19503057202229757e+00, -6.80816854993113618e-01, -4.75451542812438191e-02, -3.63561156712966682e-01, -3.00554557586465917e-02, -1.11104354318325937e-01, -5.47348705835308702e-01, -5.07000490580571062e-01, -3.46004026308845136e-01, -6.94098883004767853e-02];
pub const SDA_Q: &[f64] = &[1.98670556233663587e+00, -3.92208676593678085e-01, 5.02573627393828937e-01, -4.97937752555820679e-01, -3.67572258114805206e-01, 6.71274222574097190e-01, 1.60554644681176667e-01, -4.34936669500457729e-01, -9.44408215792676753e-01, 8.11716262230477298e-02, 9.69410518214162020e-01, 1.15975992695997299e+00, 4.53959833339338592e-01, -6.07496167019395905e-01, -1.34991817095094491e+00, -1.21735987910659538e+00, 1.40592649371641354e+00, -4.22592936756137738e-01, 1.09063500120466950e-01, 1.24427972168346446e+00];
pub const SDA_K: &[f64] = &[5.03344182017196259e-02, 6.83605179131501539e-01, -3.88854784507179474e-01, -2.13004734871553891e+00, -9.67723420048586386e-02, 7.09151966895723906e-01, -1.25977673618323083e+00, 1.48368128144501021e+00, 1.89542780797207855e+00, -9.79120867540680173e-01, -4.00410093089469843e-01, 9.22145625755198206e-01, -1.19427752307603896e+00, -6.99379733478570076e-02, 2.23201168843926423e+00, -2.06551363128315346e+00, -5.96164757476540741e-01, -1.86323176016805458e+00, -2.27873939298149919e+00, 3.04719577277151044e-02];
pub const SDA_V: &[f64] = &[5.34792364427644995e-01, -7.07521401796540772e-01, -2.32073554188001130e-01, -4.05283441943679740e-02, 2.01871049809507180e-01, -7.87892509667003860e-01, -1.26567555039167390e+00, 1.85101896546307987e-01, -1.11069926951559106e+00, 1.27750320345826252e+00, -2.43049779880144867e-01, -2.30405714934474792e+00, -8.38263276990931616e-01, 8.16882131067604295e-02, 8.52603050105634863e-01, -8.27760516223812637e-01, 1.65014537738104083e+00, -1.34004301589142272e+00, 3.97982066124031253e-01, -1.34422453877760839e+00];
pub const SDA_Y: &[f64] = &[-9.01714301199964208e-01, 1.02570397992300988e+00, 3.83416535495341826e-01, -7.40969277471071552e-01, 5.68014908622669346e-02, -4.30190361204003779e-01, 1.71264306443435183e-01, -7.40706932901900705e-01, 1.38276377151862723e-01, -4.81866249255659795e-01, -3.34198802780998394e-01, -1.05277033635239992e+00, -1.66448124216132011e-02, 1.01502595718828935e-02, 2.86969548910509208e-02, -6.93771527352782580e-01, -6.72337088662681381e-01, 7.54125161966445856e-01, -6.37775604377564531e-01, -8.51380809833579777e-01];
pub const SDA_CT: &[f64] = &[3.51878533194254994e-01, -1.10672057790091927e+00, -1.19372161096258078e+00, -1.01978344225517481e+00, -3.25272935676194863e-01, 5.74981108127087470e-01, -3.18580638397917337e-01, -3.16897705795454565e-01, -4.50822751389280241e-01, 3.03304522460866199e-01, -9.13289534701282268e-01, -9.16687163656868670e-02, -2.02457870932778317e+00, -7.39590444510518474e-01, 1.59999324939389931e+00, -1.10356522107619903e+00, 1.06192451902008256e+00, -5.21232223206961498e-01, -2.19516647694753486e-01, 1.42265418854524217e+00];
pub const SDA_GQ: &[f64] = &[-4.76650578258346835e-01, 1.46112353578117388e-01, -5.84974881246207556e-01, 5.67641504101481065e-01, 5.40361857108239210e-02, -2.57570124788602875e-02, -1.64064148944118776e-01, 2.09771988042642354e-01, -3.66995683292222416e-02, 2.02820281589671358e-01, -5.18833208012756009e-01, 5.98616280668173961e-01, 8.30207714192438218e-01, 4.49606963616244748e-01, -5.69632477311242336e-01, 5.96883426806090744e-01, -8.76537898336661403e-01, 1.25609217964193248e-01, -3.44763876269223057e-01, 3.60147539068114531e-01];
pub const SDA_GK: &[f64] = &[3.20227279649057783e-01, -8.81207826856823528e-02, 4.90519259974547039e-01, 4.68209393180654132e-01, 2.60499691936610822e-01, -9.74064249110837971e-02, 3.85782541496191234e-01, 1.00833569950440305e+00, -8.81833717354060242e-01, 7.97276455548349278e-02, -1.37041112943933271e-02, -7.30347580974950228e-01, -1.21077517584092062e-01, 1.12410540036385152e-02, -3.07337391396805104e-01, -1.14194560242446216e-01, 4.22184263352483935e-01, 9.45585080382927018e-02, -5.55260298779539752e-01, -6.32002951467660612e-01];
pub const SDA_GV: &[f64] = &[-2.98147693873826281e-01, 4.22792018075773823e-02, 3.21189287065794304e-01, -8.04981518700569887e-01, -3.11954812472471976e-01, 7.47698502272738236e-02, -4.26572285523772909e-01, 5.48372860818649555e-01, 2.34595014889413644e-01, -1.61515770060497799e+00, -4.98194965851582405e-01, 2.71979065098607864e-01, -4.31401456126496607e-01, 1.65151702523980370e-01, -9.49893210371868246e-01, -7.31835728291531540e-01, -5.79962396595539387e-01, -1.56300668984298952e-01, 5.08355992318794581e-01, -3.92795575872428970e-01];
pub const LN_X: &[f64] = &[-4.93708069939183314e-01, -1.14466901616198838e-01, -1.03141811920395376e+00, 1.03254928930761491e+00, -9.81422843176312232e-01, -5.76510675379897974e-01, -6.80107109799379383e-01, 1.03786250458297036e+00, -1.95952458386038453e+00, 2.42291254210500684e+00, -2.74130005682648892e-01, -1.03350715235242596e+00];
pub const LN_G: &[f64] = &[-1.65012886093856059e-01, -7.49792599614510835e-01, 1.64921389205369984e+00];
pub const LN_B: &[f64] = &[-1.45010740733900828e-01, -2.01562725646168994e+00, -4.77881133883487019e-01];
pub const LN_Y: &[f64] = &[-1.68179537144189345e-01, -2.87672457666263304e+00, -2.60347594626792977e+00, -3.74119633260475926e-01, -1.32058989642706415e+00, -1.23892323729614118e+00, -1.25367859002751769e-01, -2.97529701140656533e+00, -2.39241254375535384e+00, -3.73218767824199771e-01, -1.68910450282624947e+00, -2.04048960586100270e+00];
pub const LN_CT: &[f64] = &[-1.25057565384508385e+00, 1.57282779874767659e-01, -1.05819530295355868e+00, 6.01773555272738903e-01, 1.05386533738247468e+00, -3.23163228639482492e-01, 8.63711952334919153e-01, 4.56947737582070079e-01, 1.83823955566390707e+00, 5.25555460029339283e-01, -1.04949119386739431e+00, -3.50281393550371412e-01];
pub const LN_GX: &[f64] = &[1.74986010770505040e+00, -1.02597166652722827e+00, -7.23888441177822251e-01, -1.62843558727926996e-02, -6.47390150169187550e-02, 8.10233708897113991e-02, -9.34606239887415091e-01, 3.98922590713701064e-01, 5.35683649173714360e-01, -1.12338163827738910e-01, 5.11324614912121223e-01, -3.98986451084382410e-01];
pub const LN_GG: &[f64] = &[1.28394532103720715e+00, 2.45616822996135936e-01, -2.89094960714134097e-01];
pub const LN_GB: &[f64] = &[7.40465313791913493e-01, 6.18604660971918019e-01, 1.06599630520494426e-01];
pub const LIN_X: &[f64] = &[-2.40514345871355173e-01, -2.46297745659229106e+00, -7.45842960415404321e-01, 3.41804018145014266e-01, -2.13831052736250404e+00, 1.32443211470226108e+00, -2.09101095287423666e+00, 6.51979244758849920e-03];
pub const LIN_W: &[f64] = &[-1.71428513876289501e+00, 6.81976234889269506e-01, -5.44895981455580825e-01, -3.42260180730551022e+00, 2.05112381586693232e-01, -5.64393789241407040e-01, 4.89502228116356408e-01, 4.12972601475952494e-01, -6.30931410698105544e-01, -5.39171511677910997e-01, -9.57170132334526413e-01, -9.71867291571310798e-01];
pub const LIN_B: &[f64] = &[1.71678192833730248e+00, -4.13110006898523063e-01, 4.93012074150072144e-01];
pub const LIN_Y: &[f64] = &[-3.14052213660237944e-01, 7.03710605976364145e-01, 2.35443786794210164e+00, 7.40275592639257596e+00, -2.62006725634704374e+00, 3.12316014373864892e+00];
pub const LIN_CT: &[f64] = &[3.72289670722027566e-01, -1.61794471638673665e+00, 3.12011173791735708e-01, -1.06893381795853415e+00, -1.34118056777997041e+00, 1.00990240690663713e+00];
pub const LIN_GX: &[f64] = &[-1.16692879392138571e+00, 9.98823120958108657e-01, -1.29349446566233461e+00, -2.24559959283784716e+00, 9.20185467795237022e-01, -5.16544085189905910e-01, -1.04070155485086158e+00, 2.12317287215806783e+00];
pub const LIN_GW: &[f64] = &[2.19617142936615739e+00, -2.33267134330610393e+00, 1.95748269110557715e+00, 1.20280878733375313e-01, 3.25699944229570226e+00, 2.20865874689073483e+00, 4.01115593406835114e+00, -5.61764224134146395e-01, -2.23452811166626653e+00, 5.69070693168316266e-01, -2.34442833171934595e+00, 1.13231026993508968e-01];
pub const LIN_GB: &[f64] = &[-6.96644147236506583e-01, -2.95912528416670728e+00, 1.32191358069837284e+00];
pub const SM_X: &[f64] = &[3.97929286690874406e-01, 1.20053207144954643e+00, -2.25308414361109755e+00, 1.75499551594487158e-01, -9.46071907058106121e-02, -2.44927045227994966e-01, -7.48343806675024759e-01, 1.69504958835283781e+00, 6.24857211060564244e-01, -8.75129776015924010e-01];
pub const SM_Y: &[f64] = &[2.12153581377891365e-01, 4.73387000866430652e-01, 1.49737253605358670e-02, 1.69844059285999271e-01, 1.29641633109142840e-01, 8.70933720528778710e-02, 5.26446186606635974e-02, 6.06046925997080210e-01, 2.07839270170188939e-01, 4.63758131191894102e-02];
pub const SM_CT: &[f64] = &[-1.42131452125805757e+00, -1.62571644332363680e-01, 8.30613146230835819e-01, 2.54749426288070291e-01, -1.08275789619702745e-01, 1.34219190184148518e-01, 8.75628433060664513e-01, 4.23606372213623461e-01, -6.83327608024133282e-01, -1.11338966630722402e+00];
pub const SM_GX: &[f64] = &[-2.30077642268921023e-01, 8.24908211617078335e-02, 1.74809471334313113e-02, 1.00475957233011073e-01, 2.96299167407708466e-02, 1.16389719392155969e-03, 3.97347382852660802e-02, 1.83481293571100684e-01, -1.67140810322046945e-01, -5.72391187282413894e-02];
pub const GELU_X: &[f64] = &[-3.00000000000000000e+00, -1.50000000000000000e+00, -5.00000000000000000e-01, 0.00000000000000000e+00, 5.00000000000000000e-01, 1.50000000000000000e+00, 3.00000000000000000e+00];
pub const GELU_Y: &[f64] = &[-4.04969409489031040e-03, -1.00210801903287045e-01, -1.54268769362993441e-01, 0.00000000000000000e+00, 3.45731230637006559e-01, 1.39978919809671298e+00, 2.99595030590510980e+00];
pub const GELU_GX: &[f64] = &[-1.19456472041839200e-02, -1.27469192229979600e-01, 1.32504875343837120e-01, 5.00000000000000000e-01, 8.67495124656162853e-01, 1.12746919222997954e+00, 1.01194564720418390e+00];
pub const HSW_X: &[f64] = &[-4.00000000000000000e+00, -3.00000000000000000e+00, -1.00000000000000000e+00, 0.00000000000000000e+00, 1.00000000000000000e+00, 3.00000000000000000e+00, 4.00000000000000000e+00];
pub const HSW_Y: &[f64] = &[-0.00000000000000000e+00, -0.00000000000000000e+00, -3.33333333333333315e-01, 0.00000000000000000e+00, 6.66666666666666630e-01, 3.00000000000000000e+00, 4.00000000000000000e+00];
pub const HSW_GX: &[f64] = &[0.00000000000000000e+00, 0.00000000000000000e+00, 1.66666666666666685e-01, 5.00000000000000000e-01, 8.33333333333333259e-01, 1.00000000000000000e+00, 1.00000000000000000e+00];
pub const BN_X: &[f64] = &[2.11595107320242848e+00, -7.96136346164618924e-01, 1.29835620221603665e+00, 3.32033327341212881e-01, -1.41750761346174192e+00, 4.28944183311746260e-02, -2.28774558203012068e-01, 4.63501396661484599e-01];
pub const BN_G: &[f64] = &[1.50000000000000000e+00, -6.99999999999999956e-01];
pub const BN_B: &[f64] = &[2.00000000000000011e-01, 9.00000000000000022e-01];
pub const BN_MEAN: &[f64] = &[2.99999999999999989e-01, -1.00000000000000006e-01];
pub const BN_VAR: &[f64] = &[1.69999999999999996e+00, 4.00000000000000022e-01];
pub const BN_Y: &[f64] = &[2.28915019735873848e+00, -1.06104359182072994e+00, 1.34855300215539109e+00, 2.36852552430795588e-01, 2.35819548527349188e+00, 7.41846837504175793e-01, 1.04252553645313228e+00, 2.76326038528092011e-01];
