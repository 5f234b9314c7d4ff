"""Reference values used as fixtures: residue tables, H coefficients, special values.

Table entries are c_p+ p^-g mod p; None marks primes dividing D.
"""

RESIDUES_SMALL = {
    82: {5: 3, 13: 4, 17: 14, 29: 20, 37: 21, 41: None, 53: 1, 61: 11, 73: 42, 89: 77, 97: 92, 101: 31, 109: 37, 113: 64, 137: 6, 149: 146, 157: 101, 173: 158, 181: 20, 193: 48, 197: 110, 229: 206, 233: 178, 241: 114, 257: 32, 269: 127, 277: 50, 281: 145, 293: 187, 313: 65, 317: 212, 337: 241, 349: 114, 353: 61, 373: 97, 389: 381, 397: 15, 401: 394, 409: 255, 421: 92, 433: 306, 449: 11, 457: 178, 461: 205, 509: 335, 521: 105, 541: 12, 557: 229, 569: 473, 577: 71, 593: 505, 601: 597, 613: 292, 617: 408, 641: 388, 653: 67, 661: 642, 673: 620, 677: 492, 701: 682, 709: 333, 733: 398, 757: 577, 761: 172, 769: 208, 773: 264, 797: 550, 809: 267, 821: 638, 829: 799, 853: 85, 857: 13, 877: 505, 881: 373, 929: 775, 937: 795, 941: 5, 953: 35, 977: 587, 997: 839},
    -33: {5: 4, 13: 10, 17: 13, 29: 8, 37: 12, 41: 37, 53: 10, 61: 1, 73: 15, 89: 13, 97: 57, 101: 61, 109: 43, 113: 29, 137: 136, 149: 21, 157: 100, 173: 156, 181: 78, 193: 72, 197: 109, 229: 19, 233: 140, 241: 54, 257: 203, 269: 261, 277: 130, 281: 171, 293: 232, 313: 72, 317: 108, 337: 104, 349: 336, 353: 104, 373: 195, 389: 13, 397: 205, 401: 197, 409: 138, 421: 97, 433: 155, 449: 32, 457: 369, 461: 304, 509: 500, 521: 469, 541: 18, 557: 107, 569: 274, 577: 506, 593: 155, 601: 350, 613: 311, 617: 187, 641: 548, 653: 343, 661: 125, 673: 407, 677: 583, 701: 180, 709: 79, 733: 544, 757: 537, 761: 445, 769: 448, 773: 270, 797: 603, 809: 606, 821: 728, 829: 825, 853: 476, 857: 802, 877: 353, 881: 427, 929: 430, 937: 456, 941: 594, 953: 633, 977: 653, 997: 563},
    -34: {5: 4, 13: 9, 17: None, 29: 2, 37: 26, 41: 7, 53: 14, 61: 33, 73: 40, 89: 76, 97: 10, 101: 43, 109: 31, 113: 30, 137: 8, 149: 89, 157: 147, 173: 61, 181: 45, 193: 122, 197: 76, 229: 51, 233: 18, 241: 89, 257: 41, 269: 243, 277: 272, 281: 50, 293: 49, 313: 179, 317: 14, 337: 80, 349: 344, 353: 78, 373: 315, 389: 32, 397: 279, 401: 308, 409: 95, 421: 369, 433: 417, 449: 345, 457: 159, 461: 250, 509: 411, 521: 172, 541: 162, 557: 38, 569: 566, 577: 0, 593: 524, 601: 515, 613: 363, 617: 188, 641: 186, 653: 170, 661: 382, 673: 102, 677: 22, 701: 211, 709: 707, 733: 276, 757: 519, 761: 554, 769: 45, 773: 685, 797: 33, 809: 196, 821: 789, 829: 430, 853: 473, 857: 25, 877: 734, 881: 355, 929: 923, 937: 829, 941: 645, 953: 133, 977: 428, 997: 408},
    -39: {5: 1, 13: None, 17: 0, 29: 20, 37: 16, 41: 37, 53: 8, 61: 18, 73: 44, 89: 74, 97: 92, 101: 92, 109: 3, 113: 98, 137: 7, 149: 119, 157: 31, 173: 3, 181: 177, 193: 125, 197: 14, 229: 132, 233: 212, 241: 108, 257: 136, 269: 169, 277: 267, 281: 64, 293: 215, 313: 123, 317: 137, 337: 35, 349: 85, 353: 288, 373: 216, 389: 273, 397: 59, 401: 22, 409: 70, 421: 199, 433: 37, 449: 337, 457: 60, 461: 12, 509: 208, 521: 382, 541: 59, 557: 216, 569: 237, 577: 574, 593: 454, 601: 491, 613: 75, 617: 206, 641: 269, 653: 332, 661: 176, 673: 73, 677: 68, 701: 527, 709: 595, 733: 16, 757: 150, 761: 428, 769: 652, 773: 439, 797: 92, 809: 12, 821: 45, 829: 418, 853: 579, 857: 5, 877: 828, 881: 267, 929: 9, 937: 904, 941: 558, 953: 819, 977: 915, 997: 882},
    17: {5: 2, 13: 6, 17: None, 29: 1, 37: 6, 41: 34, 53: 21, 61: 43, 73: 31, 89: 84, 97: 41, 101: 34, 109: 27, 113: 31, 137: 17, 149: 91, 157: 109, 173: 3, 181: 99, 193: 74, 197: 186, 229: 25, 233: 136, 241: 82, 257: 25, 269: 214, 277: 109, 281: 235, 293: 121, 313: 276, 317: 314, 337: 76, 349: 103, 353: 219, 373: 300, 389: 250, 397: 312, 401: 193, 409: 44, 421: 187, 433: 429, 449: 345, 457: 238, 461: 71, 509: 412, 521: 424, 541: 132, 557: 547, 569: 554, 577: 156, 593: 313, 601: 290, 613: 490, 617: 532, 641: 499, 653: 384, 661: 80, 673: 501, 677: 651, 701: 420, 709: 330, 733: 307, 757: 671, 761: 691, 769: 697, 773: 52, 797: 492, 809: 154, 821: 24, 829: 93, 853: 192, 857: 20, 877: 528, 881: 328, 929: 593, 937: 427, 941: 71, 953: 317, 977: 238, 997: 211},
    -14: {5: 1, 13: 3, 17: 11, 29: 0, 37: 36, 41: 7, 53: 9, 61: 57, 73: 5, 89: 82, 97: 69, 101: 10, 109: 54, 113: 75, 137: 93, 149: 146, 157: 35, 173: 77, 181: 85, 193: 44, 197: 19, 229: 207, 233: 230, 241: 28, 257: 36, 269: 18, 277: 0, 281: 147, 293: 239, 313: 41, 317: 130, 337: 267, 349: 5, 353: 60, 373: 198, 389: 33, 397: 272, 401: 157, 409: 25, 421: 134, 433: 175, 449: 111, 457: 133, 461: 148, 509: 101, 521: 129, 541: 65, 557: 336, 569: 267, 577: 271, 593: 72, 601: 229, 613: 521, 617: 293, 641: 33, 653: 201, 661: 659, 673: 115, 677: 63, 701: 380, 709: 432, 733: 382, 757: 417, 761: 101, 769: 603, 773: 703, 797: 372, 809: 39, 821: 567, 829: 805, 853: 834, 857: 294, 877: 658, 881: 602, 929: 277, 937: 400, 941: 686, 953: 605, 977: 392, 997: 607},
}
RESIDUES_LARGE = {
    82: {29009: 25650, 29017: 2820, 29021: 11083, 29033: 28457, 29077: 14804, 29101: 8296, 29129: 25398, 29137: 11967, 29153: 21169, 29173: 9596, 29201: 27808, 29209: 17480, 29221: 10441, 29269: 4577, 29297: 302, 29333: 15913, 29389: 28936, 29401: 3675, 29429: 6780, 29437: 17070, 29453: 57, 29473: 11341, 29501: 20384, 29537: 12361, 29569: 2147, 29573: 14394, 29581: 8560, 29629: 28337, 29633: 14670, 29641: 5608, 29669: 20520, 29717: 26628, 29741: 581, 29753: 4788, 29761: 10181, 29789: 17699, 29833: 14126, 29837: 29016, 29873: 24668, 29881: 27804, 29917: 8462, 29921: 14442, 29989: 11184},
    -33: {29009: 23127, 29017: 18581, 29021: 5690, 29033: 24461, 29077: 11706, 29101: 17887, 29129: 22104, 29137: 8087, 29153: 10422, 29173: 27126, 29201: 18751, 29209: 25574, 29221: 4222, 29269: 8091, 29297: 24353, 29333: 6596, 29389: 7811, 29401: 14554, 29429: 11389, 29437: 14093, 29453: 21091, 29473: 8907, 29501: 24356, 29537: 4242, 29569: 16852, 29573: 22250, 29581: 16558, 29629: 18609, 29633: 5698, 29641: 20521, 29669: 7822, 29717: 26613, 29741: 24054, 29753: 6974, 29761: 12106, 29789: 295, 29833: 4510, 29837: 20966, 29873: 4490, 29881: 18837, 29917: 17177, 29921: 20982, 29989: 7771},
    -34: {29009: 2319, 29017: 20044, 29021: 7203, 29033: 8759, 29077: 10879, 29101: 11405, 29129: 1256, 29137: 14839, 29153: 27377, 29173: 10426, 29201: 1663, 29209: 26288, 29221: 3439, 29269: 18622, 29297: 11929, 29333: 6496, 29389: 3473, 29401: 27879, 29429: 26246, 29437: 16470, 29453: 12802, 29473: 4052, 29501: 12630, 29537: 3350, 29569: 14648, 29573: 1696, 29581: 21191, 29629: 8370, 29633: 22556, 29641: 12418, 29669: 26359, 29717: 16105, 29741: 17026, 29753: 14012, 29761: 5979, 29789: 8422, 29833: 9716, 29837: 4124, 29873: 5529, 29881: 27388, 29917: 1116, 29921: 6729, 29989: 6327},
    -39: {29009: 23907, 29017: 17655, 29021: 16719, 29033: 24782, 29077: 27218, 29101: 3758, 29129: 15983, 29137: 2323, 29153: 3436, 29173: 14543, 29201: 26052, 29209: 23118, 29221: 15921, 29269: 2602, 29297: 10928, 29333: 24112, 29389: 19903, 29401: 11800, 29429: 167, 29437: 28787, 29453: 17808, 29473: 12428, 29501: 13100, 29537: 3811, 29569: 3185, 29573: 13205, 29581: 534, 29629: 14834, 29633: 11543, 29641: 24522, 29669: 26038, 29717: 29029, 29741: 5772, 29753: 12099, 29761: 5036, 29789: 22502, 29833: 481, 29837: 17704, 29873: 5739, 29881: 22372, 29917: 12357, 29921: 14884, 29989: 25027},
    17: {29009: 2335, 29017: 28801, 29021: 21473, 29033: 16202, 29077: 21375, 29101: 4867, 29129: 27700, 29137: 21504, 29153: 15374, 29173: 14146, 29201: 10329, 29209: 15890, 29221: 20174, 29269: 8749, 29297: 6390, 29333: 25483, 29389: 16483, 29401: 20475, 29429: 24609, 29437: 6001, 29453: 14024, 29473: 27500, 29501: 25119, 29537: 3605, 29569: 21444, 29573: 25891, 29581: 29153, 29629: 26381, 29633: 19394, 29641: 7262, 29669: 3437, 29717: 12500, 29741: 12560, 29753: 373, 29761: 5256, 29789: 17747, 29833: 22479, 29837: 5190, 29873: 17532, 29881: 18039, 29917: 3665, 29921: 8950, 29989: 29511},
    -14: {29009: 22753, 29017: 10064, 29021: 28871, 29033: 22261, 29077: 26584, 29101: 19197, 29129: 14477, 29137: 11674, 29153: 11577, 29173: 15233, 29201: 10761, 29209: 21215, 29221: 2642, 29269: 14748, 29297: 24694, 29333: 17739, 29389: 4201, 29401: 13536, 29429: 24452, 29437: 12774, 29453: 15022, 29473: 341, 29501: 13208, 29537: 15245, 29569: 18834, 29573: 6662, 29581: 10018, 29629: 5673, 29633: 27146, 29641: 12119, 29669: 14200, 29717: 20097, 29741: 4084, 29753: 27858, 29761: 10290, 29789: 26607, 29833: 4411, 29837: 18103, 29873: 25844, 29881: 23336, 29917: 6666, 29921: 16489, 29989: 22258},
}

# selected coefficients of H(X) as (re, im); for -33, -34, -39 the usual display
# puts these one degree higher, and negated for -33 and -39
H_COEFFICIENTS = {
    17: {"degree": 128, 18: (-323854307090694728597766056638496367408758560, 0)},
    -14: {"degree": 192, 40: (-17505698603459355436042213669487147582723059629657863703494656, 0)},
    -33: {"degree": 960, 106: (-1113692168077398337776583577672684033100787524823564456336793469544236988256687451462978531053315714809424535132928653349841223188030109083362424335025724366445599913427072012330376056614920708186540769427783267556086484634044977612377544550389135642352731231407460900676813436679704408203489626279865234049813647279886534594840349456308756593767370028550083854901398254552448895886221992192, 0)},
    -34: {"degree": 1024, 103: (77204307928555030347104155808943238623645695750472799686347608665234547847422997182187637013858030921907403287538876053146805325940886391064789219998704939425565353633393347750247741128349033057831750881240233625554871425511245949242274695130737463617636330569858811760278660678921523140860877514259352431551963116165178346512108029927115844217508794334700569430116613294495880552612844403970375491308137706684416, 0)},
    -39: {"degree": 576, 51: (35574071678397044833407680795640050549797044276846960111069851600418481271142416832402951865624578964900556956228075392651317299924206183586571720641221008764113343860595870542652478897038226690477175270591499924870328538293899715218933146816, 35574071678397044833407680795640050549797044276846960111069851600418481271142416832402951865624578964900556956228075392651317299924206183586571720641221008764113343860595870542652478897038226690477175270591499924870328538293899715218933146816)},
}

DEGREES = {-14: 192, 17: 128, -33: 960, -34: 1024, -39: 576, 82: 6400}

# exact c_17+ for D = -39
SPECIAL_D39_P17 = (3 ** 11 * 5 ** 2 * 7 ** 2 * 13 ** 4 * 17 ** 3 * 11 * 163
                   * 428532544446776087)

# c_577+ for D = -34 is 69 * 577^3 mod 577^4
SPECIAL_D34_P577 = (577, 4, 69 * 577 ** 3)

# primes p < 1000 with c_p+ p^-g = 0 mod p
EXCEPTIONAL = {-14: (29, 277), -34: (577,), -39: (17,)}
