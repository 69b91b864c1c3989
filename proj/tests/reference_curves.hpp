#pragma once

// Reference parameter curves and minors used as regression oracles.
#include "entropyflow/alpha_poly.hpp"

namespace reference_curves {
using entropyflow::AlphaPoly;
using entropyflow::make_rational;
using entropyflow::rational_from_string;

inline AlphaPoly a_hat() { return AlphaPoly({make_rational(3L,10L),make_rational(32L,5L),make_rational(-87L,10L),make_rational(11L,10L),make_rational(4L,5L)}); }
inline AlphaPoly b_hat() { return AlphaPoly({make_rational(47L,5L),make_rational(-249L,10L),make_rational(491L,10L),make_rational(-243L,5L),make_rational(177L,10L)}); }
inline AlphaPoly c_hat() { return AlphaPoly({make_rational(-257L,10L),make_rational(573L,5L),make_rational(-1313L,5L),make_rational(1311L,5L),make_rational(-471L,5L)}); }
inline AlphaPoly d_hat() { return AlphaPoly({make_rational(0L,1L),make_rational(-1L,5L),make_rational(3L,5L),make_rational(-2L,5L)}); }
inline AlphaPoly e_hat() { return AlphaPoly({make_rational(1L,2L),make_rational(-23L,10L),make_rational(28L,5L),make_rational(-37L,10L)}); }
inline AlphaPoly a_tilde() { return AlphaPoly({make_rational(4L,1L),make_rational(-4L,1L)}); }
inline AlphaPoly b_tilde() { return AlphaPoly({make_rational(6L,1L),make_rational(-7L,2L)}); }
inline AlphaPoly c_tilde() { return AlphaPoly({make_rational(-12L,1L),make_rational(7L,1L)}); }
inline AlphaPoly d_tilde() { return AlphaPoly(); }
inline AlphaPoly e_tilde() { return AlphaPoly({make_rational(3L,2L),make_rational(-3L,2L)}); }
inline AlphaPoly bhat4_14() { return AlphaPoly({make_rational(47369L,2500L),make_rational(23039L,10000L),make_rational(-175141L,10000L),make_rational(2584L,625L),make_rational(44217L,10000L),make_rational(-13907L,5000L),make_rational(5007L,10000L)}); }
inline AlphaPoly bhat4_15() { return AlphaPoly({make_rational(-18093L,1000L),make_rational(152677L,5000L),make_rational(-43579L,2000L),make_rational(3699L,1000L),make_rational(58957L,10000L),make_rational(-19833L,5000L),make_rational(7379L,10000L)}); }
inline AlphaPoly bhat4_16() { return AlphaPoly({make_rational(50069L,2000L),make_rational(-840213L,10000L),make_rational(253913L,2500L),make_rational(-30867L,1000L),make_rational(-56879L,2000L),make_rational(57293L,2500L),make_rational(-23093L,5000L)}); }
inline AlphaPoly bhat4_18() { return AlphaPoly({make_rational(-3101L,10000L),make_rational(8251L,625L),make_rational(-163353L,5000L),make_rational(134523L,10000L),make_rational(93089L,10000L),make_rational(-10911L,1250L),make_rational(9283L,5000L)}); }
inline AlphaPoly bhat4_19() { return AlphaPoly({make_rational(-452647L,5000L),make_rational(873259L,2500L),make_rational(-561449L,1250L),make_rational(1464337L,10000L),make_rational(251229L,2000L),make_rational(-266503L,2500L),make_rational(562L,25L)}); }
inline AlphaPoly bhat4_110() { return AlphaPoly({make_rational(-41779L,2500L),make_rational(114611L,5000L),make_rational(20251L,1250L),make_rational(-11993L,500L),make_rational(-53641L,10000L),make_rational(132827L,10000L),make_rational(-1921L,500L)}); }
inline AlphaPoly bhat4_23() { return AlphaPoly({make_rational(26477L,2500L),make_rational(97501L,10000L),make_rational(-66369L,2500L),make_rational(17561L,2000L),make_rational(36261L,5000L),make_rational(-58267L,10000L),make_rational(1491L,1250L)}); }
inline AlphaPoly bhat4_24() { return AlphaPoly({make_rational(-6929L,200L),make_rational(119563L,10000L),make_rational(121389L,10000L),make_rational(-131L,250L),make_rational(-27137L,10000L),make_rational(-2197L,10000L),make_rational(2547L,10000L)}); }
inline AlphaPoly bhat4_25() { return AlphaPoly({make_rational(473201L,10000L),make_rational(-1035341L,10000L),make_rational(436099L,5000L),make_rational(-20881L,1250L),make_rational(-235129L,10000L),make_rational(9996L,625L),make_rational(-14959L,5000L)}); }
inline AlphaPoly bhat4_26() { return AlphaPoly({make_rational(-54503L,2500L),make_rational(774319L,10000L),make_rational(-131649L,1250L),make_rational(959L,25L),make_rational(300441L,10000L),make_rational(-268841L,10000L),make_rational(7077L,1250L)}); }
inline AlphaPoly bhat4_27() { return AlphaPoly({make_rational(587831L,10000L),make_rational(-249659L,1250L),make_rational(2510957L,10000L),make_rational(-53958L,625L),make_rational(-699623L,10000L),make_rational(315767L,5000L),make_rational(-27457L,2000L)}); }
inline AlphaPoly bhat4_28() { return AlphaPoly({make_rational(-31417L,2000L),make_rational(15469L,1000L),make_rational(79289L,2500L),make_rational(-243313L,10000L),make_rational(-6526L,625L),make_rational(128911L,10000L),make_rational(-14703L,5000L)}); }
inline AlphaPoly bhat4_29() { return AlphaPoly({make_rational(612877L,5000L),make_rational(-2512343L,5000L),make_rational(1706961L,2500L),make_rational(-2392199L,10000L),make_rational(-1919021L,10000L),make_rational(1705479L,10000L),make_rational(-45599L,1250L)}); }
inline AlphaPoly bhat4_210() { return AlphaPoly({make_rational(265611L,5000L),make_rational(-1137657L,10000L),make_rational(411707L,10000L),make_rational(283843L,10000L),make_rational(-10673L,1250L),make_rational(-1017L,100L),make_rational(19553L,5000L)}); }
inline AlphaPoly bhat4_35() { return AlphaPoly({make_rational(16461L,1000L),make_rational(-5817L,250L),make_rational(71531L,10000L),make_rational(2224L,625L),make_rational(-7221L,5000L),make_rational(-5843L,10000L),make_rational(1141L,5000L)}); }
inline AlphaPoly bhat4_36() { return AlphaPoly({make_rational(-72349L,10000L),make_rational(91751L,5000L),make_rational(-104657L,5000L),make_rational(34999L,5000L),make_rational(58837L,10000L),make_rational(-51981L,10000L),make_rational(5529L,5000L)}); }
inline AlphaPoly bhat4_38() { return AlphaPoly({make_rational(-13097L,2000L),make_rational(19139L,1000L),make_rational(-2559L,250L),make_rational(-8151L,5000L),make_rational(2699L,1250L),make_rational(-4711L,10000L),make_rational(167L,5000L)}); }
inline AlphaPoly bhat4_39() { return AlphaPoly({make_rational(-118887L,5000L),make_rational(646429L,10000L),make_rational(-500069L,10000L),make_rational(10549L,2500L),make_rational(59307L,5000L),make_rational(-73719L,10000L),make_rational(17191L,10000L)}); }
inline AlphaPoly bhat4_310() { return AlphaPoly({make_rational(32573L,2500L),make_rational(-25136L,625L),make_rational(86079L,2500L),make_rational(-35571L,10000L),make_rational(-88379L,10000L),make_rational(46327L,10000L),make_rational(-7687L,10000L)}); }
inline AlphaPoly bhat4_45() { return AlphaPoly({make_rational(-27753L,500L),make_rational(1103729L,10000L),make_rational(-39117L,500L),make_rational(127L,20L),make_rational(203177L,10000L),make_rational(-26007L,2500L),make_rational(16589L,10000L)}); }
inline AlphaPoly bhat4_46() { return AlphaPoly({make_rational(256607L,10000L),make_rational(-750153L,10000L),make_rational(451819L,5000L),make_rational(-303021L,10000L),make_rational(-253643L,10000L),make_rational(111257L,5000L),make_rational(-4727L,1000L)}); }
inline AlphaPoly bhat4_48() { return AlphaPoly({make_rational(-2952L,625L),make_rational(179653L,5000L),make_rational(-852339L,10000L),make_rational(410441L,10000L),make_rational(129973L,5000L),make_rational(-50403L,2000L),make_rational(10487L,2000L)}); }
inline AlphaPoly bhat4_49() { return AlphaPoly({make_rational(-388021L,5000L),make_rational(200729L,625L),make_rational(-4564779L,10000L),make_rational(341133L,2000L),make_rational(1309323L,10000L),make_rational(-294561L,2500L),make_rational(246089L,10000L)}); }
inline AlphaPoly bhat4_410() { return AlphaPoly({make_rational(9163L,625L),make_rational(-674489L,10000L),make_rational(612943L,5000L),make_rational(-591053L,10000L),make_rational(-179459L,5000L),make_rational(96641L,2500L),make_rational(-4397L,500L)}); }
inline AlphaPoly bhat4_56() { return AlphaPoly({make_rational(-42439L,2000L),make_rational(310979L,5000L),make_rational(-650747L,10000L),make_rational(160209L,10000L),make_rational(177993L,10000L),make_rational(-26189L,2000L),make_rational(25633L,10000L)}); }
inline AlphaPoly bhat4_57() { return AlphaPoly({make_rational(818129L,5000L),make_rational(-238123L,500L),make_rational(4731637L,10000L),make_rational(-267451L,2500L),make_rational(-321731L,2500L),make_rational(455437L,5000L),make_rational(-86299L,5000L)}); }
inline AlphaPoly bhat4_58() { return AlphaPoly({make_rational(46699L,1250L),make_rational(-595911L,5000L),make_rational(1381783L,10000L),make_rational(-10119L,250L),make_rational(-96683L,2500L),make_rational(304993L,10000L),make_rational(-30139L,5000L)}); }
inline AlphaPoly bhat4_59() { return AlphaPoly({make_rational(849263L,10000L),make_rational(-1417223L,5000L),make_rational(207254L,625L),make_rational(-498243L,5000L),make_rational(-92653L,1000L),make_rational(374241L,5000L),make_rational(-7509L,500L)}); }
inline AlphaPoly bhat4_67() { return AlphaPoly({make_rational(49461L,2000L),make_rational(-52891L,625L),make_rational(853751L,10000L),make_rational(-149831L,10000L),make_rational(-57119L,2500L),make_rational(137913L,10000L),make_rational(-11969L,5000L)}); }
inline AlphaPoly bhat4_69() { return AlphaPoly({make_rational(-98161L,2000L),make_rational(1729089L,10000L),make_rational(-1035349L,5000L),make_rational(164183L,2500L),make_rational(142449L,2500L),make_rational(-495499L,10000L),make_rational(10713L,1000L)}); }
inline AlphaPoly bhat4_610() { return AlphaPoly({make_rational(-4337L,1250L),make_rational(-24941L,10000L),make_rational(13283L,500L),make_rational(-98733L,5000L),make_rational(-3307L,400L),make_rational(117867L,10000L),make_rational(-29069L,10000L)}); }
inline AlphaPoly bhat4_77() { return AlphaPoly({make_rational(981753L,5000L),make_rational(-8820363L,10000L),make_rational(12481179L,10000L),make_rational(-2219399L,5000L),make_rational(-689559L,2000L),make_rational(319271L,1000L),make_rational(-179297L,2500L)}); }
inline AlphaPoly bhat4_78() { return AlphaPoly({make_rational(-798409L,10000L),make_rational(1129127L,5000L),make_rational(-1983151L,10000L),make_rational(283227L,10000L),make_rational(133343L,2500L),make_rational(-147211L,5000L),make_rational(20969L,5000L)}); }
inline AlphaPoly bhat4_79() { return AlphaPoly({make_rational(1501853L,5000L),make_rational(-2909801L,2500L),make_rational(743303L,500L),make_rational(-4806471L,10000L),make_rational(-1016849L,2500L),make_rational(1795027L,5000L),make_rational(-198409L,2500L)}); }
inline AlphaPoly bhat4_710() { return AlphaPoly({make_rational(2167103L,10000L),make_rational(-2948117L,5000L),make_rational(518651L,1000L),make_rational(-1007159L,10000L),make_rational(-691607L,5000L),make_rational(478531L,5000L),make_rational(-178679L,10000L)}); }
inline AlphaPoly bhat4_89() { return AlphaPoly({make_rational(304151L,2000L),make_rational(-1351759L,2500L),make_rational(6563579L,10000L),make_rational(-2113353L,10000L),make_rational(-1818437L,10000L),make_rational(788011L,5000L),make_rational(-168239L,5000L)}); }
inline AlphaPoly bhat4_99() { return AlphaPoly({make_rational(7741109L,10000L),make_rational(-7203131L,2500L),make_rational(35525537L,10000L),make_rational(-11166017L,10000L),make_rational(-2404027L,2500L),make_rational(851997L,1000L),make_rational(-384583L,2000L)}); }
inline AlphaPoly chat4_1() { return AlphaPoly({make_rational(8489L,10000L),make_rational(-7671L,1250L),make_rational(51563L,5000L),make_rational(-43353L,10000L),make_rational(-3573L,1250L),make_rational(1874L,625L),make_rational(-3599L,5000L)}); }
inline AlphaPoly chat4_2() { return AlphaPoly({make_rational(33383L,10000L),make_rational(-40119L,2500L),make_rational(58149L,2500L),make_rational(-5546L,625L),make_rational(-3984L,625L),make_rational(31839L,5000L),make_rational(-1507L,1000L)}); }
inline AlphaPoly chat4_3() { return AlphaPoly({make_rational(-21739L,1000L),make_rational(74069L,1000L),make_rational(-171979L,2000L),make_rational(50301L,2000L),make_rational(238219L,10000L),make_rational(-479L,25L),make_rational(39123L,10000L)}); }
inline AlphaPoly chat4_4() { return AlphaPoly({make_rational(-194197L,10000L),make_rational(141981L,2500L),make_rational(-23023L,400L),make_rational(28241L,2000L),make_rational(159513L,10000L),make_rational(-22969L,2000L),make_rational(10489L,5000L)}); }
inline AlphaPoly btilde4_13() { return AlphaPoly({make_rational(-42163L,5000L), make_rational(42163L,10000L)}); }
inline AlphaPoly btilde4_14() { return AlphaPoly({make_rational(36667L,5000L), make_rational(-36667L,10000L)}); }
inline AlphaPoly btilde4_15() { return AlphaPoly({make_rational(-631L,1000L), make_rational(631L,2000L)}); }
inline AlphaPoly btilde4_23() { return AlphaPoly({make_rational(-7699L,5000L), make_rational(7699L,10000L)}); }
inline AlphaPoly btilde4_24() { return AlphaPoly({make_rational(9191L,5000L), make_rational(-9191L,10000L)}); }
inline AlphaPoly btilde4_25() { return AlphaPoly({make_rational(-3097L,2500L), make_rational(3097L,5000L)}); }
inline AlphaPoly btilde4_35() { return AlphaPoly({make_rational(5187L,2500L), make_rational(-5187L,5000L)}); }
inline AlphaPoly btilde4_45() { return AlphaPoly({make_rational(-56793L,5000L), make_rational(56793L,10000L)}); }
inline AlphaPoly bhat4_13() { return AlphaPoly({make_rational(-22813L,2500L),make_rational(2244L,625L),make_rational(3589L,1000L),make_rational(-19791L,10000L),make_rational(-2291L,2500L),make_rational(10537L,10000L),make_rational(-2361L,10000L)}); }
inline AlphaPoly Ahat_minor2() { return AlphaPoly({make_rational(432L,5L),make_rational(-3312L,5L),make_rational(8568L,5L),make_rational(-8748L,5L),make_rational(3186L,5L)}); }
inline AlphaPoly Ahat_minor3() { return AlphaPoly({make_rational(-125991L,250L),make_rational(1056702L,125L),make_rational(-8019621L,125L),make_rational(7341099L,25L),make_rational(-227464371L,250L),make_rational(505782483L,250L),make_rational(-1660856481L,500L),make_rational(507425778L,125L),make_rational(-365740659L,100L),make_rational(118059363L,50L),make_rational(-129122208L,125L),make_rational(68516523L,250L),make_rational(-16635699L,500L)}); }
inline AlphaPoly Ahat_minor4() { return AlphaPoly({make_rational(-1152239L,40000L),make_rational(15486703L,20000L),make_rational(-396809831L,40000L),make_rational(7993634641L,100000L),make_rational(-45104308341L,100000L),make_rational(23516351671L,12500L),make_rational(-239125432197L,40000L),make_rational(147169345899L,10000L),make_rational(-707339063119L,25000L),make_rational(1063361232613L,25000L),make_rational(-4976176278313L,100000L),make_rational(2239391676329L,50000L),make_rational(-3038852817539L,100000L),make_rational(150252323103L,10000L),make_rational(-510688609929L,100000L),make_rational(10665829017L,10000L),make_rational(-2579598531L,25000L)}); }
inline AlphaPoly Atilde_minor2() { return AlphaPoly({make_rational(-36L,1L),make_rational(108L,1L),make_rational(-54L,1L)}); }
inline AlphaPoly Atilde_minor3() { return AlphaPoly({make_rational(-216L,1L),make_rational(4752L,5L),make_rational(-17013L,10L),make_rational(15687L,10L),make_rational(-15357L,20L),make_rational(918L,5L),make_rational(-81L,5L)}); }
inline AlphaPoly Atilde_minor4() { return AlphaPoly({make_rational(675L,2L),make_rational(-22197L,8L),make_rational(395399L,40L),make_rational(-200303L,10L),make_rational(4064497L,160L),make_rational(-833569L,40L),make_rational(43959L,4L),make_rational(-142191L,40L),make_rational(100503L,160L),make_rational(-891L,20L)}); }
inline AlphaPoly Bhat_minor2() { return AlphaPoly({make_rational(-50732344L,390625L),make_rational(573169029L,1562500L),make_rational(-607804039L,1562500L),make_rational(109290576L,390625L),make_rational(-93678383L,390625L),make_rational(38807557L,312500L),make_rational(682907899L,6250000L),make_rational(-59872081L,312500L),make_rational(251284609L,3125000L),make_rational(49834517L,3125000L),make_rational(-154300777L,6250000L),make_rational(24877857L,3125000L),make_rational(-5574321L,6250000L)}); }
inline AlphaPoly Btilde_minor2() { return AlphaPoly({make_rational(-454324819L,1562500L),make_rational(238732097L,781250L),make_rational(-500603569L,6250000L)}); }
inline AlphaPoly Btilde_minor3() { return AlphaPoly({make_rational(-438001032453021L,62500000000L),make_rational(5175798706543321L,375000000000L),make_rational(-509153633512039L,50000000000L),make_rational(1667741758389153L,500000000000L),make_rational(-306929095417783L,750000000000L)}); }
inline AlphaPoly Btilde_minor4() { return AlphaPoly({rational_from_string("106907812000023320531/31250000000000"),rational_from_string("-11941261263467145196009/937500000000000"),rational_from_string("57745805445309793475201/2812500000000000"),rational_from_string("-52599610348687644579377/2812500000000000"),rational_from_string("236684569508655171493181/22500000000000000"),rational_from_string("-168160914586096868096609/45000000000000000"),rational_from_string("36790596886486158864649/45000000000000000"),rational_from_string("-2261963247429711691417/22500000000000000"),rational_from_string("29853438100600780261/5625000000000000")}); }
inline AlphaPoly Btilde_minor5() { return AlphaPoly({rational_from_string("-9934446308114898609844379679/6250000000000000000"),rational_from_string("323945921545470005007470644013/37500000000000000000"),rational_from_string("-5638668909610747881953730449723/262500000000000000000"),rational_from_string("50978303366390828876872956490319/1575000000000000000000"),rational_from_string("-41567837907180801367875123504161/1260000000000000000000"),rational_from_string("100973770368719046349402041644999/4200000000000000000000"),rational_from_string("-40657813223145876523558824995863/3150000000000000000000"),rational_from_string("65296281180295313362171162682347/12600000000000000000000"),rational_from_string("-9844108344634481776712942491363/6300000000000000000000"),rational_from_string("73901644114311300085443979463/210000000000000000000"),rational_from_string("-87376603047509939526712981/1500000000000000000"),rational_from_string("5410300990654303603596485179/787500000000000000000"),rational_from_string("-85946172234149745487043861/157500000000000000000"),rational_from_string("1097226912458919191921/42000000000000000"),rational_from_string("-29853438100600780261/52500000000000000")}); }
inline AlphaPoly Btsallis_hat_minor2() { return AlphaPoly({make_rational(-2222541781L,6250000L),make_rational(592469061L,781250L),make_rational(-1688296349L,3125000L),make_rational(60415263L,390625L),make_rational(-92756161L,6250000L)}); }

}  // namespace reference_curves
