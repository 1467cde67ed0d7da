var pe;function d(e,t,r){function n(s,u){if(s._zod||Object.defineProperty(s,"_zod",{value:{def:u,constr:i,traits:new Set},enumerable:!1}),s._zod.traits.has(e))return;s._zod.traits.add(e),t(s,u);let a=i.prototype,l=Object.keys(a);for(let m=0;m<l.length;m++){let h=l[m];h in s||(s[h]=a[h].bind(s))}}let o=r?.Parent??Object;class c extends o{}Object.defineProperty(c,"name",{value:e});function i(s){var u;let a=r?.Parent?new c:this;n(a,s),(u=a._zod).deferred??(u.deferred=[]);for(let l of a._zod.deferred)l();return a}return Object.defineProperty(i,"init",{value:n}),Object.defineProperty(i,Symbol.hasInstance,{value:s=>r?.Parent&&s instanceof r.Parent?!0:s?._zod?.traits?.has(e)}),Object.defineProperty(i,"name",{value:e}),i}var y=class extends Error{constructor(){super("Encountered Promise during synchronous parse. Use .parseAsync() instead.")}};(pe=globalThis).__zod_globalConfig??(pe.__zod_globalConfig={});var J=globalThis.__zod_globalConfig;function w(e){return e&&Object.assign(J,e),J}function de(e){let t=Object.values(e).filter(n=>typeof n=="number");return Object.entries(e).filter(([n,o])=>t.indexOf(+n)===-1).map(([n,o])=>o)}function fe(e,t){return typeof t=="bigint"?t.toString():t}function me(e){return{get value(){{let r=e();return Object.defineProperty(this,"value",{value:r}),r}throw new Error("cached value already set")}}}function he(e){return e==null}function _e(e){let t=e.startsWith("^")?1:0,r=e.endsWith("$")?e.length-1:e.length;return e.slice(t,r)}var le=Symbol("evaluating");function b(e,t,r){let n;Object.defineProperty(e,t,{get(){if(n!==le)return n===void 0&&(n=le,n=r()),n},set(o){Object.defineProperty(e,t,{value:o})},configurable:!0})}var X="captureStackTrace"in Error?Error.captureStackTrace:(...e)=>{};function F(e){return typeof e=="object"&&e!==null&&!Array.isArray(e)}function Y(e){if(F(e)===!1)return!1;let t=e.constructor;if(t===void 0||typeof t!="function")return!0;let r=t.prototype;return!(F(r)===!1||Object.prototype.hasOwnProperty.call(r,"isPrototypeOf")===!1)}function Q(e){return Y(e)?{...e}:Array.isArray(e)?[...e]:e instanceof Map?new Map(e):e instanceof Set?new Set(e):e}var ge=new Set(["string","number","symbol"]);function C(e){return e.replace(/[.*+?^${}()|[\]\\]/g,"\\$&")}function ee(e,t,r){let n=new e._zod.constr(t??e._zod.def);return(!t||r?.parent)&&(n._zod.parent=e),n}function x(e){let t=e;if(!t)return{};if(typeof t=="string")return{error:()=>t};if(t?.message!==void 0){if(t?.error!==void 0)throw new Error("Cannot specify both `message` and `error` params");t.error=t.message}return delete t.message,typeof t.error=="string"?{...t,error:()=>t.error}:t}function xe(e){return Object.keys(e).filter(t=>e[t]._zod.optin==="optional"&&e[t]._zod.optout==="optional")}var ze={safeint:[Number.MIN_SAFE_INTEGER,Number.MAX_SAFE_INTEGER],int32:[-2147483648,2147483647],uint32:[0,4294967295],float32:[-34028234663852886e22,34028234663852886e22],float64:[-Number.MAX_VALUE,Number.MAX_VALUE]};function R(e,t=0){if(e.aborted===!0)return!0;for(let r=t;r<e.issues.length;r++)if(e.issues[r]?.continue!==!0)return!0;return!1}function ve(e,t=0){if(e.aborted===!0)return!0;for(let r=t;r<e.issues.length;r++)if(e.issues[r]?.continue===!1)return!0;return!1}function Z(e,t){return t.map(r=>{var n;return(n=r).path??(n.path=[]),r.path.unshift(e),r})}function L(e){return typeof e=="string"?e:e?.message}function k(e,t,r){let n=e.message?e.message:L(e.inst?._zod.def?.error?.(e))??L(t?.error?.(e))??L(r.customError?.(e))??L(r.localeError?.(e))??"Invalid input",{inst:o,continue:c,input:i,...s}=e;return s.path??(s.path=[]),s.message=n,t?.reportInput&&(s.input=i),s}function $e(e){return Array.isArray(e)?"array":typeof e=="string"?"string":"unknown"}var be=(e,t)=>{e.name="$ZodError",Object.defineProperty(e,"_zod",{value:e._zod,enumerable:!1}),Object.defineProperty(e,"issues",{value:t,enumerable:!1}),e.message=JSON.stringify(t,fe,2),Object.defineProperty(e,"toString",{value:()=>e.message,enumerable:!1})},ye=d("$ZodError",be),j=d("$ZodError",be,{Parent:Error});var ft=e=>(t,r,n,o)=>{let c=n?{...n,async:!1}:{async:!1},i=t._zod.run({value:r,issues:[]},c);if(i instanceof Promise)throw new y;if(i.issues.length){let s=new(o?.Err??e)(i.issues.map(u=>k(u,c,w())));throw X(s,o?.callee),s}return i.value},I=ft(j),mt=e=>async(t,r,n,o)=>{let c=n?{...n,async:!0}:{async:!0},i=t._zod.run({value:r,issues:[]},c);if(i instanceof Promise&&(i=await i),i.issues.length){let s=new(o?.Err??e)(i.issues.map(u=>k(u,c,w())));throw X(s,o?.callee),s}return i.value},D=mt(j),ht=e=>(t,r,n)=>{let o=n?{...n,async:!1}:{async:!1},c=t._zod.run({value:r,issues:[]},o);if(c instanceof Promise)throw new y;return c.issues.length?{success:!1,error:new(e??ye)(c.issues.map(i=>k(i,o,w())))}:{success:!0,data:c.value}},M=ht(j),_t=e=>async(t,r,n)=>{let o=n?{...n,async:!0}:{async:!0},c=t._zod.run({value:r,issues:[]},o);return c instanceof Promise&&(c=await c),c.issues.length?{success:!1,error:new e(c.issues.map(i=>k(i,o,w())))}:{success:!0,data:c.value}},N=_t(j);var gt="(?:(?:\\d\\d[2468][048]|\\d\\d[13579][26]|\\d\\d0[48]|[02468][048]00|[13579][26]00)-02-29|\\d{4}-(?:(?:0[13578]|1[02])-(?:0[1-9]|[12]\\d|3[01])|(?:0[469]|11)-(?:0[1-9]|[12]\\d|30)|(?:02)-(?:0[1-9]|1\\d|2[0-8])))",xt=new RegExp(`^${gt}$`);var we=e=>{let t=e?`[\\s\\S]{${e?.minimum??0},${e?.maximum??""}}`:"[\\s\\S]*";return new RegExp(`^${t}$`)};var Ze=/^-?\d+$/,te=/^-?\d+(?:\.\d+)?$/,ke=/^(?:true|false)$/i;var O=d("$ZodCheck",(e,t)=>{var r;e._zod??(e._zod={}),e._zod.def=t,(r=e._zod).onattach??(r.onattach=[])});var Pe=d("$ZodCheckNumberFormat",(e,t)=>{O.init(e,t),t.format=t.format||"float64";let r=t.format?.includes("int"),n=r?"int":"number",[o,c]=ze[t.format];e._zod.onattach.push(i=>{let s=i._zod.bag;s.format=t.format,s.minimum=o,s.maximum=c,r&&(s.pattern=Ze)}),e._zod.check=i=>{let s=i.value;if(r){if(!Number.isInteger(s)){i.issues.push({expected:n,format:t.format,code:"invalid_type",continue:!1,input:s,inst:e});return}if(!Number.isSafeInteger(s)){s>0?i.issues.push({input:s,code:"too_big",maximum:Number.MAX_SAFE_INTEGER,note:"Integers must be within the safe integer range.",inst:e,origin:n,inclusive:!0,continue:!t.abort}):i.issues.push({input:s,code:"too_small",minimum:Number.MIN_SAFE_INTEGER,note:"Integers must be within the safe integer range.",inst:e,origin:n,inclusive:!0,continue:!t.abort});return}}s<o&&i.issues.push({origin:"number",input:s,code:"too_small",minimum:o,inclusive:!0,inst:e,continue:!t.abort}),s>c&&i.issues.push({origin:"number",input:s,code:"too_big",maximum:c,inclusive:!0,inst:e,continue:!t.abort})}});var Ae=d("$ZodCheckMinLength",(e,t)=>{var r;O.init(e,t),(r=e._zod.def).when??(r.when=n=>{let o=n.value;return!he(o)&&o.length!==void 0}),e._zod.onattach.push(n=>{let o=n._zod.bag.minimum??Number.NEGATIVE_INFINITY;t.minimum>o&&(n._zod.bag.minimum=t.minimum)}),e._zod.check=n=>{let o=n.value;if(o.length>=t.minimum)return;let i=$e(o);n.issues.push({origin:i,code:"too_small",minimum:t.minimum,inclusive:!0,input:o,inst:e,continue:!t.abort})}});var Me={major:4,minor:4,patch:3};var z=d("$ZodType",(e,t)=>{var r;e??(e={}),e._zod.def=t,e._zod.bag=e._zod.bag||{},e._zod.version=Me;let n=[...e._zod.def.checks??[]];e._zod.traits.has("$ZodCheck")&&n.unshift(e);for(let o of n)for(let c of o._zod.onattach)c(e);if(n.length===0)(r=e._zod).deferred??(r.deferred=[]),e._zod.deferred?.push(()=>{e._zod.run=e._zod.parse});else{let o=(i,s,u)=>{let a=R(i),l;for(let m of s){if(m._zod.def.when){if(ve(i)||!m._zod.def.when(i))continue}else if(a)continue;let h=i.issues.length,_=m._zod.check(i);if(_ instanceof Promise&&u?.async===!1)throw new y;if(l||_ instanceof Promise)l=(l??Promise.resolve()).then(async()=>{await _,i.issues.length!==h&&(a||(a=R(i,h)))});else{if(i.issues.length===h)continue;a||(a=R(i,h))}}return l?l.then(()=>i):i},c=(i,s,u)=>{if(R(i))return i.aborted=!0,i;let a=o(s,n,u);if(a instanceof Promise){if(u.async===!1)throw new y;return a.then(l=>e._zod.parse(l,u))}return e._zod.parse(a,u)};e._zod.run=(i,s)=>{if(s.skipChecks)return e._zod.parse(i,s);if(s.direction==="backward"){let a=e._zod.parse({value:i.value,issues:[]},{...s,skipChecks:!0});return a instanceof Promise?a.then(l=>c(l,i,s)):c(a,i,s)}let u=e._zod.parse(i,s);if(u instanceof Promise){if(s.async===!1)throw new y;return u.then(a=>o(a,n,s))}return o(u,n,s)}}b(e,"~standard",()=>({validate:o=>{try{let c=M(e,o);return c.success?{value:c.data}:{issues:c.error?.issues}}catch{return N(e,o).then(i=>i.success?{value:i.data}:{issues:i.error?.issues})}},vendor:"zod",version:1}))}),Te=d("$ZodString",(e,t)=>{z.init(e,t),e._zod.pattern=[...e?._zod.bag?.patterns??[]].pop()??we(e._zod.bag),e._zod.parse=(r,n)=>{if(t.coerce)try{r.value=String(r.value)}catch{}return typeof r.value=="string"||r.issues.push({expected:"string",code:"invalid_type",input:r.value,inst:e}),r}});var ne=d("$ZodNumber",(e,t)=>{z.init(e,t),e._zod.pattern=e._zod.bag.pattern??te,e._zod.parse=(r,n)=>{if(t.coerce)try{r.value=Number(r.value)}catch{}let o=r.value;if(typeof o=="number"&&!Number.isNaN(o)&&Number.isFinite(o))return r;let c=typeof o=="number"?Number.isNaN(o)?"NaN":Number.isFinite(o)?void 0:"Infinity":void 0;return r.issues.push({expected:"number",code:"invalid_type",input:o,inst:e,...c?{received:c}:{}}),r}}),Ce=d("$ZodNumberFormat",(e,t)=>{Pe.init(e,t),ne.init(e,t)}),Re=d("$ZodBoolean",(e,t)=>{z.init(e,t),e._zod.pattern=ke,e._zod.parse=(r,n)=>{if(t.coerce)try{r.value=!!r.value}catch{}let o=r.value;return typeof o=="boolean"||r.issues.push({expected:"boolean",code:"invalid_type",input:o,inst:e}),r}});var je=d("$ZodUnknown",(e,t)=>{z.init(e,t),e._zod.parse=r=>r});function Se(e,t,r){e.issues.length&&t.issues.push(...Z(r,e.issues)),t.value[r]=e.value}var Ne=d("$ZodArray",(e,t)=>{z.init(e,t),e._zod.parse=(r,n)=>{let o=r.value;if(!Array.isArray(o))return r.issues.push({expected:"array",code:"invalid_type",input:o,inst:e}),r;r.value=Array(o.length);let c=[];for(let i=0;i<o.length;i++){let s=o[i],u=t.element._zod.run({value:s,issues:[]},n);u instanceof Promise?c.push(u.then(a=>Se(a,r,i))):Se(u,r,i)}return c.length?Promise.all(c).then(()=>r):r}});function U(e,t,r,n,o,c){let i=r in n;if(e.issues.length){if(o&&c&&!i)return;t.issues.push(...Z(r,e.issues))}if(!i&&!o){e.issues.length||t.issues.push({code:"invalid_type",expected:"nonoptional",input:void 0,path:[r]});return}e.value===void 0?i&&(t.value[r]=void 0):t.value[r]=e.value}function vt(e){let t=Object.keys(e.shape);for(let n of t)if(!e.shape?.[n]?._zod?.traits?.has("$ZodType"))throw new Error(`Invalid element at key "${n}": expected a Zod schema`);let r=xe(e.shape);return{...e,keys:t,keySet:new Set(t),numKeys:t.length,optionalKeys:new Set(r)}}function $t(e,t,r,n,o,c){let i=[],s=o.keySet,u=o.catchall._zod,a=u.def.type,l=u.optin==="optional",m=u.optout==="optional";for(let h in t){if(h==="__proto__"||s.has(h))continue;if(a==="never"){i.push(h);continue}let _=u.run({value:t[h],issues:[]},n);_ instanceof Promise?e.push(_.then(E=>U(E,r,h,t,l,m))):U(_,r,h,t,l,m)}return i.length&&r.issues.push({code:"unrecognized_keys",keys:i,input:t,inst:c}),e.length?Promise.all(e).then(()=>r):r}var Oe=d("$ZodObject",(e,t)=>{if(z.init(e,t),!Object.getOwnPropertyDescriptor(t,"shape")?.get){let s=t.shape;Object.defineProperty(t,"shape",{get:()=>{let u={...s};return Object.defineProperty(t,"shape",{value:u}),u}})}let n=me(()=>vt(t));b(e._zod,"propValues",()=>{let s=t.shape,u={};for(let a in s){let l=s[a]._zod;if(l.values){u[a]??(u[a]=new Set);for(let m of l.values)u[a].add(m)}}return u});let o=F,c=t.catchall,i;e._zod.parse=(s,u)=>{i??(i=n.value);let a=s.value;if(!o(a))return s.issues.push({expected:"object",code:"invalid_type",input:a,inst:e}),s;s.value={};let l=[],m=i.shape;for(let h of i.keys){let _=m[h],E=_._zod.optin==="optional",ae=_._zod.optout==="optional",H=_._zod.run({value:a[h],issues:[]},u);H instanceof Promise?l.push(H.then(lt=>U(lt,s,h,a,E,ae))):U(H,s,h,a,E,ae)}return c?$t(l,a,s,u,n.value,e):l.length?Promise.all(l).then(()=>s):s}});var Le=d("$ZodRecord",(e,t)=>{z.init(e,t),e._zod.parse=(r,n)=>{let o=r.value;if(!Y(o))return r.issues.push({expected:"record",code:"invalid_type",input:o,inst:e}),r;let c=[],i=t.keyType._zod.values;if(i){r.value={};let s=new Set;for(let a of i)if(typeof a=="string"||typeof a=="number"||typeof a=="symbol"){s.add(typeof a=="number"?a.toString():a);let l=t.keyType._zod.run({value:a,issues:[]},n);if(l instanceof Promise)throw new Error("Async schemas not supported in object keys currently");if(l.issues.length){r.issues.push({code:"invalid_key",origin:"record",issues:l.issues.map(_=>k(_,n,w())),input:a,path:[a],inst:e});continue}let m=l.value,h=t.valueType._zod.run({value:o[a],issues:[]},n);h instanceof Promise?c.push(h.then(_=>{_.issues.length&&r.issues.push(...Z(a,_.issues)),r.value[m]=_.value})):(h.issues.length&&r.issues.push(...Z(a,h.issues)),r.value[m]=h.value)}let u;for(let a in o)s.has(a)||(u=u??[],u.push(a));u&&u.length>0&&r.issues.push({code:"unrecognized_keys",input:o,inst:e,keys:u})}else{r.value={};for(let s of Reflect.ownKeys(o)){if(s==="__proto__"||!Object.prototype.propertyIsEnumerable.call(o,s))continue;let u=t.keyType._zod.run({value:s,issues:[]},n);if(u instanceof Promise)throw new Error("Async schemas not supported in object keys currently");if(typeof s=="string"&&te.test(s)&&u.issues.length){let m=t.keyType._zod.run({value:Number(s),issues:[]},n);if(m instanceof Promise)throw new Error("Async schemas not supported in object keys currently");m.issues.length===0&&(u=m)}if(u.issues.length){t.mode==="loose"?r.value[s]=o[s]:r.issues.push({code:"invalid_key",origin:"record",issues:u.issues.map(m=>k(m,n,w())),input:s,path:[s],inst:e});continue}let l=t.valueType._zod.run({value:o[s],issues:[]},n);l instanceof Promise?c.push(l.then(m=>{m.issues.length&&r.issues.push(...Z(s,m.issues)),r.value[u.value]=m.value})):(l.issues.length&&r.issues.push(...Z(s,l.issues)),r.value[u.value]=l.value)}}return c.length?Promise.all(c).then(()=>r):r}});var Fe=d("$ZodEnum",(e,t)=>{z.init(e,t);let r=de(t.entries),n=new Set(r);e._zod.values=n,e._zod.pattern=new RegExp(`^(${r.filter(o=>ge.has(typeof o)).map(o=>typeof o=="string"?C(o):o.toString()).join("|")})$`),e._zod.parse=(o,c)=>{let i=o.value;return n.has(i)||o.issues.push({code:"invalid_value",values:r,input:i,inst:e}),o}}),De=d("$ZodLiteral",(e,t)=>{if(z.init(e,t),t.values.length===0)throw new Error("Cannot create literal schema with no valid values");let r=new Set(t.values);e._zod.values=r,e._zod.pattern=new RegExp(`^(${t.values.map(n=>typeof n=="string"?C(n):n?C(n.toString()):String(n)).join("|")})$`),e._zod.parse=(n,o)=>{let c=n.value;return r.has(c)||n.issues.push({code:"invalid_value",values:t.values,input:c,inst:e}),n}});var Ue=d("$ZodNullable",(e,t)=>{z.init(e,t),b(e._zod,"optin",()=>t.innerType._zod.optin),b(e._zod,"optout",()=>t.innerType._zod.optout),b(e._zod,"pattern",()=>{let r=t.innerType._zod.pattern;return r?new RegExp(`^(${_e(r.source)}|null)$`):void 0}),b(e._zod,"values",()=>t.innerType._zod.values?new Set([...t.innerType._zod.values,null]):void 0),e._zod.parse=(r,n)=>r.value===null?r:t.innerType._zod.run(r,n)}),Ve=d("$ZodDefault",(e,t)=>{z.init(e,t),e._zod.optin="optional",b(e._zod,"values",()=>t.innerType._zod.values),e._zod.parse=(r,n)=>{if(n.direction==="backward")return t.innerType._zod.run(r,n);if(r.value===void 0)return r.value=t.defaultValue,r;let o=t.innerType._zod.run(r,n);return o instanceof Promise?o.then(c=>Ie(c,t)):Ie(o,t)}});function Ie(e,t){return e.value===void 0&&(e.value=t.defaultValue),e}function Be(e,t){return new e({type:"string",...x(t)})}function qe(e,t){return new e({type:"number",checks:[],...x(t)})}function Ke(e,t){return new e({type:"number",check:"number_format",abort:!1,format:"safeint",...x(t)})}function We(e,t){return new e({type:"boolean",...x(t)})}function He(e){return new e({type:"unknown"})}function oe(e,t){return new Ae({check:"min_length",...x(t),minimum:e})}var $=d("ZodMiniType",(e,t)=>{if(!e._zod)throw new Error("Uninitialized schema in ZodMiniType.");z.init(e,t),e.def=t,e.type=t.type,e.parse=(r,n)=>I(e,r,n,{callee:e.parse}),e.safeParse=(r,n)=>M(e,r,n),e.parseAsync=async(r,n)=>D(e,r,n,{callee:e.parseAsync}),e.safeParseAsync=async(r,n)=>N(e,r,n),e.check=(...r)=>e.clone({...t,checks:[...t.checks??[],...r.map(n=>typeof n=="function"?{_zod:{check:n,def:{check:"custom"},onattach:[]}}:n)]},{parent:!0}),e.with=e.check,e.clone=(r,n)=>ee(e,r,n),e.brand=()=>e,e.register=((r,n)=>(r.add(e,n),e)),e.apply=r=>r(e)}),yt=d("ZodMiniString",(e,t)=>{Te.init(e,t),$.init(e,t)});function f(e){return Be(yt,e)}var Ge=d("ZodMiniNumber",(e,t)=>{ne.init(e,t),$.init(e,t)});function P(e){return qe(Ge,e)}var wt=d("ZodMiniNumberFormat",(e,t)=>{Ce.init(e,t),Ge.init(e,t)});function v(e){return Ke(wt,e)}var Zt=d("ZodMiniBoolean",(e,t)=>{Re.init(e,t),$.init(e,t)});function Xe(e){return We(Zt,e)}var kt=d("ZodMiniUnknown",(e,t)=>{je.init(e,t),$.init(e,t)});function Ye(){return He(kt)}var Pt=d("ZodMiniArray",(e,t)=>{Ne.init(e,t),$.init(e,t)});function V(e,t){return new Pt({type:"array",element:e,...x(t)})}var At=d("ZodMiniObject",(e,t)=>{Oe.init(e,t),$.init(e,t),b(e,"shape",()=>t.shape)});function g(e,t){let r={type:"object",shape:e??{},...x(t)};return new At(r)}var Je=d("ZodMiniRecord",(e,t)=>{Le.init(e,t),$.init(e,t)});function T(e,t,r){return!t||!t._zod?new Je({type:"record",keyType:f(),valueType:e,...x(t)}):new Je({type:"record",keyType:e,valueType:t,...x(r)})}var Et=d("ZodMiniEnum",(e,t)=>{Fe.init(e,t),$.init(e,t),e.options=Object.values(t.entries)});function Qe(e,t){let r=Array.isArray(e)?Object.fromEntries(e.map(n=>[n,n])):e;return new Et({type:"enum",entries:r,...x(t)})}var Mt=d("ZodMiniLiteral",(e,t)=>{De.init(e,t),$.init(e,t)});function et(e,t){return new Mt({type:"literal",values:Array.isArray(e)?e:[e],...x(t)})}var St=d("ZodMiniNullable",(e,t)=>{Ue.init(e,t),$.init(e,t)});function tt(e){return new St({type:"nullable",innerType:e})}var It=d("ZodMiniDefault",(e,t)=>{Ve.init(e,t),$.init(e,t)});function rt(e,t){return new It({type:"default",innerType:e,get defaultValue(){return typeof t=="function"?t():Q(t)}})}var Rt=g({id:f(),display:f()}),nt=g({judged:v(),total:v()}),jt=g({pool_id:f(),size:v(),n_correct:v(),n_wrong:v(),remaining:v()}),Nt=g({pool_id:f(),annotator_id:f(),record_ids:V(f()),size:v()}),Ot=g({annotator_id:f(),pool_id:f(),mode:et("classify"),progress:nt,current:tt(g({record_id:f(),text:f()})),choices:V(Rt).check(oe(1)),done:Xe()}),Lt=g({status:Qe(["recorded","duplicate"]),progress:nt}),Ft=g({task:f(),wrong_text:f(),claimed_class:f(),claimed_display:f(),n_votes:v(),verdict:f()}),Dt=g({task:f(),n_votes:v(),accepts:v(),verdict:f()}),Ut=g({p:P(),r:P(),f1:P(),support:v()}),Vt=g({level:f(),run_tag:f(),macro_f1:P(),per_class:T(f(),Ut),confusion:T(f(),T(f(),P()))}),Bt=g({level:f(),summary:g({mean:P(),max:P()}),annotators:T(f(),Vt)}),qt=g({error:f(),message:f(),detail:rt(T(f(),Ye()),{})}),ot=["binary","broad","finer"],A=class extends Error{constructor(r,n,o={}){super(n);this.code=r;this.detail=o;this.name="ApiError"}},B=class{constructor(t=""){this.base=t}async request(t,r,n){let o;try{o=await fetch(this.base+r,n)}catch(i){throw new A("Unreachable",`server unreachable: ${String(i)}`)}let c=await o.json().catch(()=>null);if(!o.ok){let i=M(qt,c);throw i.success?new A(i.data.error,i.data.message,i.data.detail):new A("HttpError",`unexpected HTTP ${o.status}`)}return I(t,c)}post(t,r,n){return this.request(t,r,{method:"POST",headers:{"content-type":"application/json"},body:JSON.stringify(n)})}createPool(t,r,n){return this.post(jt,"/pools",{n_correct:t,n_wrong:r,seed:n})}assign(t,r,n=50){return this.post(Nt,`/pools/${t}/assignments`,{annotator_id:r,k:n})}next(t){return this.request(Ot,`/assignments/${encodeURIComponent(t)}`)}judge(t,r,n){return this.post(Lt,"/judgments",{annotator_id:t,record_id:r,label:n})}validationTasks(t){let r=t?`?voter_id=${encodeURIComponent(t)}`:"";return this.request(V(Ft),`/validation/tasks${r}`)}vote(t,r,n){return this.post(Dt,`/validation/${t}/votes`,{voter_id:r,accept:n})}humanReport(t){return this.request(Bt,`/reports/human?level=${t}`)}};var it=["1","2","3","4","5","6","7","8","9","0","q","w","e"];function st(e){let t=it.indexOf(e.toLowerCase());return t===-1?null:t}function ct(e){return it[e]??null}var q=class{constructor(t,r){this.api=t;this.annotator=r;this.view=null;this.submitting=!1}async refresh(){return this.view=await this.api.next(this.annotator),this.view}choiceForKey(t){if(!this.view)return null;let r=st(t);return r===null||r>=this.view.choices.length?null:this.view.choices[r]??null}async submit(t){let r=this.view;if(this.submitting)return{kind:"busy"};if(!r||r.done||!r.current)return{kind:"busy"};this.submitting=!0;try{let n=await this.api.judge(this.annotator,r.current.record_id,t),o=await this.refresh();return{kind:"advanced",status:n.status,view:o}}catch(n){if(n instanceof A&&(n.code==="AlreadyJudged"||n.code==="NotAssigned")){let o=await this.refresh();return{kind:"notice",message:n.message,view:o}}throw n}finally{this.submitting=!1}}},K=class{constructor(t,r){this.api=t;this.voter=r;this.tasks=[];this.voting=!1}async refresh(){return this.tasks=await this.api.validationTasks(this.voter),this.tasks}get current(){return this.tasks[0]??null}async vote(t){let r=this.current;if(this.voting||!r)return{kind:"busy"};this.voting=!0;try{let n=await this.api.vote(r.task,this.voter,t);return await this.refresh(),{kind:"voted",verdict:n.verdict,remaining:this.tasks.length}}catch(n){if(n instanceof A&&n.code==="DuplicateVote")return await this.refresh(),{kind:"notice",message:n.message,remaining:this.tasks.length};throw n}finally{this.voting=!1}}};async function ut(e){return Promise.all(ot.map(t=>e.humanReport(t)))}function p(e,t={},...r){let n=document.createElement(e);for(let[o,c]of Object.entries(t))n.setAttribute(o,c);for(let o of r)n.append(o);return n}function W(e){for(;e.firstChild;)e.removeChild(e.firstChild)}function ie(e,t){let r=e.querySelector(".notice");r&&(r.textContent=t)}function at(e,t,r){W(e);let n=p("button",{class:"retry"},"Retry");n.addEventListener("click",r),e.append(p("div",{class:"error-banner"},p("p",{},t),n))}function se(e,t,r){W(e);let n=p("div",{class:"progress","data-judged":String(t.progress.judged)},`${t.progress.judged} / ${t.progress.total}`);if(t.done||!t.current){e.append(p("div",{class:"screen done-screen"},p("h1",{},"Assignment complete"),p("p",{},`All ${t.progress.total} sentences are judged. Thank you.`),n));return}let o=p("blockquote",{class:"sentence",lang:"bn","data-record":t.current.record_id},t.current.text),c=p("ol",{class:"choices"});t.choices.forEach((i,s)=>{let u=ct(s),a=p("button",{class:"choice","data-choice":i.id},p("kbd",{},u??"")," ",i.display);a.addEventListener("click",()=>r(i)),c.append(p("li",{},a))}),e.append(p("div",{class:"screen classify-screen"},n,o,c,p("p",{class:"notice"}),p("p",{class:"hint"},"Keys 1-9, 0, q, w, e pick a class.")))}function ce(e,t,r){W(e);let n=t[0];if(!n){e.append(p("div",{class:"screen idle-screen"},p("h1",{},"Validation queue empty"),p("p",{},"No pending sentences right now.")));return}let o=p("button",{class:"vote-accept"},"Accept"),c=p("button",{class:"vote-reject"},"Reject");o.addEventListener("click",()=>r(!0)),c.addEventListener("click",()=>r(!1)),e.append(p("div",{class:"screen validate-screen"},p("div",{class:"queue-size"},`${t.length} pending`),p("blockquote",{class:"sentence",lang:"bn","data-task":n.task},n.wrong_text),p("p",{class:"claimed","data-class":n.claimed_class},`Claimed error: ${n.claimed_display}`),p("div",{class:"votes"},o,c),p("p",{class:"notice"})))}function pt(e,t){W(e);let r=p("div",{class:"screen results-screen"});r.append(p("h1",{},"Annotator scores"));for(let n of t){let o=p("section",{class:"level","data-level":n.level});o.append(p("h2",{},`Level: ${n.level}`));let c=p("p",{class:"summary"});c.append("mean macro-F1 ",p("span",{class:"mean","data-value":String(n.summary.mean)},n.summary.mean.toFixed(4)),", best ",p("span",{class:"max","data-value":String(n.summary.max)},n.summary.max.toFixed(4))),o.append(c);let i=p("table",{class:"annotators"});for(let s of Object.keys(n.annotators).sort()){let u=n.annotators[s];u&&i.append(p("tr",{"data-annotator":s},p("td",{},s),p("td",{class:"score","data-value":String(u.macro_f1)},u.macro_f1.toFixed(4))))}o.append(i),r.append(o)}e.append(r)}var ue=class{constructor(t,r,n){this.root=t;this.api=r;this.params=n;this.pending=Promise.resolve();this.classify=null;this.validate=null;this.keydownBound=!1}async start(){let t=this.params.get("annotator"),r=this.params.get("voter");t?(this.classify=new q(this.api,t),this.bindKeys(),await this.guard(async()=>{let n=await this.classify.refresh();se(this.root,n,o=>this.queueChoice(o))})):r?(this.validate=new K(this.api,r),await this.guard(async()=>{let n=await this.validate.refresh();ce(this.root,n,o=>this.queueVote(o))})):await this.guard(async()=>{pt(this.root,await ut(this.api))})}bindKeys(){if(this.keydownBound)return;this.keydownBound=!0,this.root.ownerDocument.addEventListener("keydown",r=>{let n=this.classify?.choiceForKey(r.key);n&&this.queueChoice(n)})}queueChoice(t){this.pending=this.guard(()=>this.choose(t))}async choose(t){let r=this.classify;if(!r)return;let n=await r.submit(t.id);n.kind!=="busy"&&(se(this.root,n.view,o=>this.queueChoice(o)),n.kind==="notice"&&ie(this.root,n.message))}queueVote(t){this.pending=this.guard(()=>this.castVote(t))}async castVote(t){let r=this.validate;if(!r)return;let n=await r.vote(t);n.kind!=="busy"&&(ce(this.root,r.tasks,o=>this.queueVote(o)),n.kind==="notice"&&ie(this.root,n.message))}async guard(t){try{await t()}catch(r){let n=r instanceof Error?r.message:String(r);at(this.root,n,()=>{this.pending=this.start()})}}};function Kt(){let e=document.getElementById("root");if(!e)return;let t=new ue(e,new B(""),new URLSearchParams(location.search));t.pending=t.start()}typeof document<"u"&&document.getElementById("root")&&Kt();export{ue as App};
