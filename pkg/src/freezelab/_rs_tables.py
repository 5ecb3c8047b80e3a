"""Frozen Chebyshev coefficients of the Riemann-Siegel correction
terms C_0..C_K as functions of z on [-1, 1].

Generated by tools/gen_rs_tables.py; do not edit by hand.
Held-out ladder residual during generation: 3.096e-55
"""

import numpy as np

K_MAX = 18

CHEB = np.array([
    [np.float64(0.6426672862397681), np.float64(1.3463431760359522e-17), np.float64(0.27197299999785396), np.float64(7.783504938599824e-18), np.float64(0.010738605819339067), np.float64(-8.040396915583737e-17), np.float64(-0.0013743815296348098), np.float64(-2.020488363120681e-17), np.float64(-0.0001246822188043378), np.float64(3.898566072592929e-17), np.float64(-5.764599717417915e-07), np.float64(6.718919708577992e-17), np.float64(2.7280674191896526e-07), np.float64(-4.6361986845280075e-17), np.float64(8.07795193016315e-09), np.float64(9.540735401563732e-18), np.float64(-2.0884705694000413e-10), np.float64(-7.487080518275945e-17), np.float64(-1.3116691847178294e-11), np.float64(2.8806408705054113e-17), np.float64(-1.5207084288108395e-14), np.float64(-1.4774646343252917e-16), np.float64(9.243378477845748e-15), np.float64(-4.4891049020417e-17), np.float64(-1.050821910321377e-15), np.float64(-4.5541763350291075e-17), np.float64(-9.894826768834259e-16), np.float64(6.062082328789809e-17), np.float64(-9.584865517364792e-16), np.float64(-3.3078286716175386e-17), np.float64(-1.0889347090889308e-15), np.float64(1.2900616090074078e-17), np.float64(-8.116265815069529e-16)],
    [np.float64(-6.092995543242891e-19), np.float64(-0.010697913921003005), np.float64(2.825634528879697e-17), np.float64(-0.017170651243377886), np.float64(2.09066340010292e-17), np.float64(-0.002793211149788472), np.float64(1.9394762283703364e-17), np.float64(3.6375653719280276e-05), np.float64(1.0533179278609757e-17), np.float64(2.7108955231153463e-05), np.float64(6.7727950083663144e-18), np.float64(1.0483749866610951e-06), np.float64(9.993801608094758e-18), np.float64(-5.886467167050447e-08), np.float64(3.4316594269402347e-19), np.float64(-4.322967271918766e-09), np.float64(-3.8765406162029265e-18), np.float64(1.1369596415629326e-11), np.float64(-9.110206557629927e-18), np.float64(6.699834462354535e-12), np.float64(-1.916775268696883e-17), np.float64(1.0079674019542916e-13), np.float64(-2.290193104485459e-17), np.float64(-5.151745876916415e-15), np.float64(-1.6262654680320914e-17), np.float64(-1.510579460007898e-16), np.float64(-1.1371103244332142e-17), np.float64(4.893689901942179e-18), np.float64(-9.641954516464146e-18), np.float64(7.749518510110728e-18), np.float64(-3.495836064622436e-18), np.float64(5.8378493730264844e-18), np.float64(-8.823648729184906e-19)],
    [np.float64(0.0031461158539889114), np.float64(-6.310983637668526e-19), np.float64(-0.002308783884530755), np.float64(-8.803248795379006e-19), np.float64(5.7698207666894405e-05), np.float64(6.387060185470168e-19), np.float64(0.00035238862023665487), np.float64(1.9074281653954046e-19), np.float64(2.524666745867968e-05), np.float64(-4.727085791461545e-19), np.float64(-3.4428211971982083e-06), np.float64(-2.320260673557502e-19), np.float64(-3.5350745566789233e-07), np.float64(3.909639975624322e-19), np.float64(3.730830179354989e-09), np.float64(-7.159427448168995e-21), np.float64(1.2776951808726822e-09), np.float64(4.1130782033592795e-19), np.float64(2.1874611591800156e-11), np.float64(7.258515879536124e-21), np.float64(-1.9141462001223485e-12), np.float64(1.203453438509624e-18), np.float64(-6.563374737467722e-14), np.float64(7.057949722701677e-20), np.float64(1.2542295971279037e-15), np.float64(2.079296921390178e-20), np.float64(7.566493194777553e-17), np.float64(-9.987261030169512e-20), np.float64(-5.347997067868557e-18), np.float64(4.377249565662798e-19), np.float64(-5.253862780272885e-18), np.float64(4.827575696366515e-22), np.float64(-3.478787127434933e-18)],
    [np.float64(1.0270769401270236e-20), np.float64(-7.123256221203876e-05), np.float64(2.6790986093637405e-19), np.float64(-0.00023234305298164813), np.float64(1.2256673788421537e-19), np.float64(0.00012929912045472487), np.float64(1.4115083517407553e-19), np.float64(-1.8074496413671346e-05), np.float64(3.082666263487209e-20), np.float64(-6.526185187220367e-06), np.float64(4.9115657124742863e-20), np.float64(1.1696365378509053e-07), np.float64(1.2113390850637196e-19), np.float64(7.349476126511248e-08), np.float64(4.7387724946910074e-20), np.float64(1.7750910076299702e-09), np.float64(3.327100950162656e-20), np.float64(-2.555552961017232e-10), np.float64(-6.17987210144394e-20), np.float64(-1.1376636548390055e-11), np.float64(-1.872511264878375e-19), np.float64(3.3498626066007585e-13), np.float64(-2.492822568466666e-19), np.float64(2.553736989043477e-14), np.float64(-1.3082510455143884e-19), np.float64(-6.76434944698783e-17), np.float64(-5.977568603661722e-20), np.float64(-2.969689801676179e-17), np.float64(-3.1899540101826905e-20), np.float64(-2.301858510076841e-19), np.float64(9.488240333114553e-22), np.float64(8.432592805762103e-20), np.float64(-1.2752900564451747e-20)],
    [np.float64(0.00016765745246696853), np.float64(-5.916547160314243e-20), np.float64(-0.0002272876894341675), np.float64(-9.272316687355381e-20), np.float64(6.477387188445686e-05), np.float64(2.2592473896979632e-20), np.float64(-8.492200500125633e-06), np.float64(-2.9364267544609077e-20), np.float64(-2.616140724522172e-06), np.float64(-7.12350046695438e-20), np.float64(8.336764968730408e-07), np.float64(-4.8830519629878946e-20), np.float64(6.324704037509467e-08), np.float64(8.605308385076436e-21), np.float64(-1.005994940322605e-08), np.float64(-1.743112023691569e-20), np.float64(-7.822677207466007e-10), np.float64(3.256033323955726e-20), np.float64(3.167658263808803e-11), np.float64(-5.3311063106461784e-20), np.float64(3.500694156421904e-12), np.float64(1.0542474312797566e-19), np.float64(-1.4315062261253202e-14), np.float64(7.352172619481109e-20), np.float64(-7.269565566127614e-15), np.float64(4.933846158777705e-20), np.float64(-8.816638485286424e-17), np.float64(-7.430668430961625e-20), np.float64(7.824650732665383e-18), np.float64(2.9685006954224803e-21), np.float64(-1.0385794824426912e-19), np.float64(-1.1240541492354848e-20), np.float64(-1.9402078460310648e-19)],
    [np.float64(-1.6214819399045593e-21), np.float64(-8.828845234808896e-05), np.float64(6.540391240798303e-20), np.float64(1.562868496932838e-05), np.float64(9.187645158489564e-20), np.float64(1.834244769716216e-07), np.float64(2.889368727725294e-20), np.float64(-2.1097267874937094e-06), np.float64(5.531344724998951e-21), np.float64(6.657016174096481e-07), np.float64(2.5979221203007477e-21), np.float64(-2.7714741205055183e-08), np.float64(4.292543995553109e-20), np.float64(-1.811124937580452e-08), np.float64(7.286172379702314e-20), np.float64(5.765890811484446e-10), np.float64(-3.861346581473165e-20), np.float64(1.8675033427358293e-10), np.float64(-2.5618270092540135e-21), np.float64(1.1051606655397575e-13), np.float64(-4.759050764878668e-20), np.float64(-7.870643705968978e-13), np.float64(-6.00312941474211e-20), np.float64(-1.445841241893721e-14), np.float64(-5.848797653873034e-21), np.float64(1.5814456763702927e-15), np.float64(-3.097888040573114e-20), np.float64(4.913341455613873e-17), np.float64(-5.3139672685576595e-20), np.float64(-1.6043172020761179e-18), np.float64(-1.6593579687532157e-20), np.float64(-7.338475765828749e-20), np.float64(-5.081156979291057e-21)],
    [np.float64(1.218974214106897e-05), np.float64(-2.876099314041646e-21), np.float64(-1.3829760140503804e-05), np.float64(-4.693538028178186e-21), np.float64(5.110967304998249e-06), np.float64(-3.605637848244285e-22), np.float64(-2.0458136450386215e-06), np.float64(2.409147144375338e-22), np.float64(4.938136644831824e-07), np.float64(-4.701134969507556e-21), np.float64(-3.61875283496435e-08), np.float64(-9.779120774356005e-22), np.float64(-1.2876905098106846e-08), np.float64(-7.004931500229872e-22), np.float64(2.5744121111289432e-09), np.float64(-1.381838741860616e-21), np.float64(1.3641457068436898e-10), np.float64(4.858259010143332e-21), np.float64(-3.0324395757236613e-11), np.float64(-1.5794291481887998e-21), np.float64(-1.3216671442889164e-12), np.float64(6.481506695144787e-21), np.float64(1.303165026929818e-13), np.float64(5.074865299195972e-21), np.float64(6.635868139210415e-15), np.float64(1.2940285410404503e-21), np.float64(-2.460264593541987e-16), np.float64(-2.844867264703e-21), np.float64(-1.6837170037724152e-17), np.float64(-8.580031915532812e-22), np.float64(1.6626016581881177e-19), np.float64(-1.9993067240038876e-21), np.float64(9.308930002008373e-21)],
    [np.float64(-8.699261298012599e-22), np.float64(-1.276865779743822e-05), np.float64(6.587991965413529e-21), np.float64(3.862933834641603e-06), np.float64(1.2606957865765345e-20), np.float64(-1.3693830936467841e-06), np.float64(2.7674867762574593e-21), np.float64(2.7647041682794216e-07), np.float64(-2.2856324046307446e-21), np.float64(-1.0283436823342354e-08), np.float64(-2.5738405212484554e-21), np.float64(-1.1755066568166622e-08), np.float64(5.744808459909584e-21), np.float64(3.055048915844112e-09), np.float64(6.2783430044466314e-21), np.float64(-1.1430441899686269e-10), np.float64(-8.117612557975327e-21), np.float64(-5.1308186751763805e-11), np.float64(-1.261445004255029e-21), np.float64(2.8355099085104593e-12), np.float64(-5.140290874323203e-21), np.float64(4.2666541155331e-13), np.float64(-8.592806421600267e-21), np.float64(-1.2763582720239046e-14), np.float64(-2.8831012522895217e-23), np.float64(-1.8569105273130194e-15), np.float64(-4.051780940899924e-21), np.float64(1.536570630758741e-17), np.float64(-7.922897314861225e-21), np.float64(4.416031041296572e-18), np.float64(-3.417024026752397e-21), np.float64(1.5392796840614358e-20), np.float64(-8.092988978124467e-22)],
    [np.float64(1.2285585088091075e-06), np.float64(-3.081534979330335e-22), np.float64(-1.1940986396077258e-06), np.float64(-1.41226926992852e-22), np.float64(-6.099999653919657e-08), np.float64(1.2605198140853162e-22), np.float64(-8.84406391388785e-09), np.float64(7.004138546657872e-23), np.float64(3.169816317194225e-08), np.float64(-2.3692547810150183e-22), np.float64(-1.4200472095885484e-08), np.float64(-5.0011707708189065e-23), np.float64(3.161410591544829e-09), np.float64(1.4306148315569968e-22), np.float64(-2.4436315262284796e-10), np.float64(1.164291182460157e-22), np.float64(-4.322631236797908e-11), np.float64(2.691814242476532e-22), np.float64(9.01768190616571e-12), np.float64(-1.5755724081265678e-22), np.float64(1.4698907705889612e-13), np.float64(4.0831940327715604e-22), np.float64(-8.703305589869292e-14), np.float64(2.7865540695488016e-23), np.float64(-8.379785814565456e-16), np.float64(-8.609775667742518e-23), np.float64(3.887430952245293e-16), np.float64(-1.293345469659014e-22), np.float64(6.2384735047103295e-18), np.float64(1.7761731579530247e-24), np.float64(-9.237608145232322e-19), np.float64(-8.246649032359489e-23), np.float64(-2.287686074134025e-20)],
    [np.float64(-1.7701566920443403e-22), np.float64(-3.020797043854293e-06), np.float64(1.2209597187454294e-21), np.float64(7.069522324295648e-07), np.float64(3.0909315035450824e-21), np.float64(-2.211652030252855e-07), np.float64(8.707046264094933e-22), np.float64(6.515797612804132e-08), np.float64(-3.012931270811988e-22), np.float64(-1.6208733981111203e-08), np.float64(-5.673450306113298e-22), np.float64(2.94852983420608e-09), np.float64(1.5922656082828168e-21), np.float64(-2.354528703752047e-10), np.float64(1.326213704752686e-21), np.float64(-4.051032345632509e-11), np.float64(-1.5995956637805984e-21), np.float64(1.2906638268173522e-11), np.float64(-7.070921509327526e-22), np.float64(-7.518327928654987e-13), np.float64(-1.3916238451289979e-21), np.float64(-1.2819168174369608e-13), np.float64(-2.1291633174779477e-21), np.float64(1.189741851631016e-14), np.float64(-2.9622082035537464e-22), np.float64(7.626050604197941e-16), np.float64(-8.56983884705824e-22), np.float64(-6.033462000235032e-17), np.float64(-2.081608631200142e-21), np.float64(-3.099095294069886e-18), np.float64(-1.1204996348730423e-21), np.float64(1.5442924666278542e-19), np.float64(-2.013957401991159e-22)],
    [np.float64(6.98115792822448e-08), np.float64(-1.604966135067883e-23), np.float64(5.1876020997818994e-08), np.float64(6.192278380080097e-23), np.float64(-1.502568940041672e-07), np.float64(4.8121638984177886e-23), np.float64(5.385175415429114e-08), np.float64(-8.95904920221278e-24), np.float64(-1.2009470947212748e-08), np.float64(1.2648567052741858e-23), np.float64(1.8441416112133029e-09), np.float64(9.734473323249732e-25), np.float64(-6.051285922584354e-11), np.float64(7.030349142253328e-25), np.float64(-5.891392764493087e-11), np.float64(-7.526850021483073e-24), np.float64(1.651577264134211e-11), np.float64(-4.1017027802514784e-23), np.float64(-1.6489918276342603e-12), np.float64(2.625786777441527e-23), np.float64(-8.450007423325935e-14), np.float64(-1.1285403361730597e-23), np.float64(3.0235179993058954e-14), np.float64(-1.0631997395670194e-22), np.float64(-6.179201673534976e-16), np.float64(-3.1868642050653344e-23), np.float64(-2.1506492857919427e-16), np.float64(6.791765663582255e-23), np.float64(5.235886896744754e-18), np.float64(-6.196494080909035e-24), np.float64(8.68059911028926e-19), np.float64(-1.8304929122761338e-23), np.float64(-1.2808466269654532e-20)],
    [np.float64(2.760054813148335e-22), np.float64(-7.205266886247988e-07), np.float64(2.9724320805268665e-22), np.float64(9.524651967693306e-08), np.float64(6.7356660804830185e-22), np.float64(-6.860710333614324e-09), np.float64(2.6362123657186775e-22), np.float64(1.0861860772160524e-09), np.float64(2.4563599802359897e-23), np.float64(-5.647654554645632e-10), np.float64(-1.2157063584442414e-22), np.float64(3.030313572208431e-10), np.float64(3.9903508159608717e-22), np.float64(-1.0161023511521936e-10), np.float64(3.042597622714755e-22), np.float64(2.1218695339140847e-11), np.float64(-4.437572422150351e-22), np.float64(-2.3594065728802297e-12), np.float64(-3.8441666243320887e-23), np.float64(-2.4935616751125163e-14), np.float64(-3.083433971908158e-22), np.float64(4.488725140901616e-14), np.float64(-5.235734940011253e-22), np.float64(-4.093845120934893e-15), np.float64(-8.980058256549309e-23), np.float64(-2.1625620203706544e-16), np.float64(-3.1721186961149256e-22), np.float64(4.048584936425239e-17), np.float64(-4.442202217655068e-22), np.float64(5.804805165003149e-19), np.float64(-1.9953496942862635e-22), np.float64(-1.838979403111438e-19), np.float64(-3.926743082360914e-23)],
    [np.float64(-2.9740973523737226e-08), np.float64(-2.4000824080418626e-19), np.float64(6.068000926947028e-08), np.float64(5.2198925382860745e-21), np.float64(-4.2394988325981946e-08), np.float64(7.938179440495109e-21), np.float64(1.3933135998976715e-08), np.float64(1.2681741597318876e-21), np.float64(-3.195666370678698e-09), np.float64(-1.0821508436204572e-21), np.float64(7.144489894927472e-10), np.float64(2.871089374791e-22), np.float64(-1.4990392420216375e-10), np.float64(-6.330113335254757e-23), np.float64(2.521962439703757e-11), np.float64(1.6551656947260877e-23), np.float64(-2.6213301413547487e-12), np.float64(-8.025331341599646e-24), np.float64(-3.004917321631096e-14), np.float64(9.89716235266259e-24), np.float64(6.173168421196718e-14), np.float64(-3.524435739288753e-23), np.float64(-8.704823824797654e-15), np.float64(-3.943300283344731e-23), np.float64(1.206734379313575e-16), np.float64(-1.774548286657629e-23), np.float64(8.339694552215426e-17), np.float64(3.618128051738626e-23), np.float64(-4.937941806906854e-18), np.float64(5.483126934418884e-25), np.float64(-3.8990202000194668e-19), np.float64(4.484235243713158e-24), np.float64(2.8411194919288767e-20)],
    [np.float64(2.564764605622218e-18), np.float64(-2.015961131026042e-07), np.float64(-1.5591471702611875e-18), np.float64(8.162947560521902e-09), np.float64(-4.189115557475506e-19), np.float64(9.21478534786809e-09), np.float64(1.1652682568576537e-19), np.float64(-3.002237039224687e-09), np.float64(-1.0445782359205474e-20), np.float64(7.320593527758504e-10), np.float64(-3.2234907404531e-23), np.float64(-1.4579010570583776e-10), np.float64(3.1254576420128705e-22), np.float64(2.1614331740547418e-11), np.float64(7.553794369175683e-23), np.float64(-1.66829573081762e-12), np.float64(-9.264952566955698e-23), np.float64(-2.0506877868019814e-13), np.float64(-2.3706372942193682e-23), np.float64(9.416392656801221e-14), np.float64(-9.454153923840166e-23), np.float64(-1.4595097454252733e-14), np.float64(-1.9620503692171322e-22), np.float64(7.364445956059684e-16), np.float64(-2.3706372942193673e-23), np.float64(1.0504029227333313e-16), np.float64(-9.748788776827921e-23), np.float64(-1.6711139943735247e-17), np.float64(-1.3558823570600238e-22), np.float64(8.237846847777464e-20), np.float64(-6.675341115524972e-23), np.float64(1.0338323527192494e-19), np.float64(-1.4119756506748225e-23)],
    [np.float64(-2.4038575449936276e-08), np.float64(-1.2992099164695361e-15), np.float64(3.047536187604157e-08), np.float64(2.726801356271801e-17), np.float64(-7.49654251103743e-09), np.float64(4.287975789107637e-17), np.float64(1.429083121720191e-09), np.float64(6.930536778201079e-18), np.float64(-6.217471891154754e-11), np.float64(-6.015608673698195e-18), np.float64(-1.6344948567634005e-11), np.float64(1.5914479625102342e-18), np.float64(2.508634942779845e-13), np.float64(-2.9871043634998496e-19), np.float64(1.6935103806174e-12), np.float64(4.991676370232677e-20), np.float64(-6.810176691725904e-13), np.float64(-7.975788149554505e-21), np.float64(1.5655208948332444e-13), np.float64(1.1893384405548798e-21), np.float64(-2.249844443200823e-14), np.float64(-1.6469711212709604e-22), np.float64(1.5019493136594747e-15), np.float64(3.5007710809631405e-24), np.float64(1.1207910501323317e-16), np.float64(-4.1660414884963306e-24), np.float64(-3.3207971894335076e-17), np.float64(1.2977434978782496e-23), np.float64(1.9355883500348985e-18), np.float64(-1.7799716243106704e-24), np.float64(1.5026994988447487e-19), np.float64(3.7735850674120816e-24), np.float64(-1.9574527542179665e-20)],
    [np.float64(7.146758762063952e-15), np.float64(-5.815459445062427e-08), np.float64(-4.758381026769458e-15), np.float64(-1.449374957346475e-09), np.float64(-1.1963716562624648e-15), np.float64(4.448215870400171e-09), np.float64(3.4640046532412646e-16), np.float64(-1.0716642600227034e-09), np.float64(-2.9959852809207664e-17), np.float64(1.9772812978977623e-10), np.float64(-9.280186431217895e-19), np.float64(-3.801793135884421e-11), np.float64(8.30147380513963e-19), np.float64(7.609516731819942e-12), np.float64(-2.082049397173846e-19), np.float64(-1.4708620146168115e-12), np.float64(3.780613568808083e-20), np.float64(2.4770730810968233e-13), np.float64(-5.202512867238479e-21), np.float64(-3.1500595366609864e-14), np.float64(4.355553102601577e-22), np.float64(2.108210995140474e-15), np.float64(-5.600343819068642e-23), np.float64(1.544729968231202e-16), np.float64(-2.1682183239354847e-23), np.float64(-5.722305041143565e-17), np.float64(-2.9994646689546376e-23), np.float64(5.535412993781375e-18), np.float64(-5.197017257041577e-23), np.float64(3.095814477327672e-20), np.float64(-2.113329433926494e-23), np.float64(-4.641987586604588e-20), np.float64(-2.8959334044687083e-24)],
    [np.float64(-1.3176865264504689e-08), np.float64(-2.1443449394502824e-12), np.float64(1.3249775692658636e-08), np.float64(4.3332291989055187e-14), np.float64(3.299097816515479e-10), np.float64(7.076170424942558e-14), np.float64(-5.746783500761392e-10), np.float64(1.1504460701401782e-14), np.float64(2.168658774692811e-10), np.float64(-9.943722275603031e-15), np.float64(-5.767883637192225e-11), np.float64(2.629246732389468e-15), np.float64(1.1922487704767551e-11), np.float64(-4.93437863546477e-16), np.float64(-2.085237394338772e-12), np.float64(8.245520671537875e-17), np.float64(3.0897252307597566e-13), np.float64(-1.3157342655979894e-17), np.float64(-3.440433927681472e-14), np.float64(1.9577461790173976e-18), np.float64(1.6165521018832082e-15), np.float64(-2.527484135030032e-19), np.float64(3.5233193449965284e-16), np.float64(2.4749018373295674e-20), np.float64(-1.0006609396184906e-16), np.float64(-1.120441157824043e-21), np.float64(1.1574044233941852e-17), np.float64(-1.5354159358311776e-22), np.float64(-3.5037666640909804e-19), np.float64(4.000040307268428e-23), np.float64(-7.926793044928688e-20), np.float64(-4.1680285413959416e-24), np.float64(9.375237173821815e-21)],
    [np.float64(4.617931990053236e-12), np.float64(-1.707980890457834e-08), np.float64(-3.3999179037595427e-12), np.float64(-6.824154515894556e-10), np.float64(-7.95518468258685e-13), np.float64(1.2754728414379674e-09), np.float64(2.4100670239403065e-13), np.float64(-1.8109903089145e-10), np.float64(-2.0051140292876447e-14), np.float64(-3.274604613321964e-12), np.float64(-1.2984372380229386e-15), np.float64(5.3224831292396936e-12), np.float64(7.561777586819967e-16), np.float64(-1.2159850931430018e-12), np.float64(-1.782105381704027e-16), np.float64(1.751559107798067e-13), np.float64(3.187813782031543e-17), np.float64(-1.1715852172560854e-14), np.float64(-4.532056196418963e-18), np.float64(-2.1850064954641167e-15), np.float64(4.7842752369559255e-19), np.float64(9.467172301559987e-16), np.float64(-2.3582898039841417e-20), np.float64(-1.8443532002488595e-16), np.float64(-4.074377249130613e-21), np.float64(2.1473500313510718e-17), np.float64(1.3416385760642113e-21), np.float64(-1.039709221331888e-18), np.float64(-2.184672167021165e-22), np.float64(-1.0860929611593586e-19), np.float64(1.382986583552756e-23), np.float64(2.1328233726054657e-20), np.float64(-2.012046531146665e-24)],
    [np.float64(-6.8038968367566095e-09), np.float64(-7.059579831276266e-10), np.float64(6.12178383889671e-09), np.float64(1.3514949647030507e-11), np.float64(1.0722396787322961e-09), np.float64(2.334403189654163e-11), np.float64(-4.599024218077902e-10), np.float64(3.801494389490166e-12), np.float64(8.799089638474906e-11), np.float64(-3.2774592563035872e-12), np.float64(-1.4218165457753542e-11), np.float64(8.663084284826967e-13), np.float64(2.1529092192971345e-12), np.float64(-1.625879117317947e-13), np.float64(-3.359586152636285e-13), np.float64(2.7171368197823933e-14), np.float64(6.106911038166638e-14), np.float64(-4.335774197006332e-15), np.float64(-1.2102500186323504e-14), np.float64(6.450919280055803e-16), np.float64(2.2197301370249277e-15), np.float64(-8.326558222406499e-17), np.float64(-3.338100150811105e-16), np.float64(8.150641752560544e-18), np.float64(3.633705621029462e-17), np.float64(-3.685387376361342e-19), np.float64(-1.963902407276936e-18), np.float64(-5.203342389974871e-20), np.float64(-1.5680596280070288e-19), np.float64(1.3731143421235096e-20), np.float64(4.4575363205077355e-20), np.float64(-1.360352038656636e-21), np.float64(-3.630795993231446e-21)],
])
